#pragma once

#include <span>
#include <string>
#include <vector>

#include "fluosq/liouville.hpp"
#include "fluosq/params.hpp"
#include "fluosq/steady_state.hpp"
#include "fluosq/types.hpp"

namespace fluosq {

enum class Transition { Pi, Sigma };
enum class Method { ExactResolvent, TimeDomainOracle, DressedApprox };
enum class Vic { On, Off };

std::string to_string(Transition t);
std::string to_string(Method m);

// Equal-time fluctuation covariances <dA_pq dA_mn> in steady state, one
// 15-vector per lowering operator of interest.  These are the tau = 0 initial
// conditions of the regression ODE dU/dtau = M U.
struct CovarianceSet {
  Vec15 u31;  // second operator A_31
  Vec15 u42;  //                 A_42
  Vec15 u41;  //                 A_41
  Vec15 u32;  //                 A_32
};

CovarianceSet initial_covariances(const Mat4c& rho_ss);

// N(omega) = (i omega - M)^-1 + (-i omega - M)^-1.  Even in omega; equals
// -2 M^-1 at omega = 0.  Requires the shifted matrices to be invertible
// (guaranteed when every eigenvalue of M has negative real part).
Mat15 resolvent(const Mat15& M, double omega);

struct SpectrumResult {
  std::vector<double> omega;
  std::vector<double> values;
  Transition transition = Transition::Pi;
  double theta = 0.0;
  double phi = 0.0;  // enters the sigma channel only
  SystemParams params;
  Method method = Method::ExactResolvent;
};

// Exact quadrature-noise spectrum of the linearly polarized fluorescence.
// Vic::Off zeroes the cross-damping both in M and in the spectral weights.
// The spectrum is even in omega and independent of params.phi.
SpectrumResult squeezing_spectrum_pi(const SystemParams& params,
                                     std::span<const double> omega_grid,
                                     double theta, Vic vic = Vic::On);

// Exact spectrum of the circularly polarized fluorescence; depends on the
// relative drive phase phi with period pi.
SpectrumResult squeezing_spectrum_sigma(const SystemParams& params,
                                        std::span<const double> omega_grid,
                                        double theta, double phi);

struct TimeDomainOptions {
  double h0 = 5e-4;        // initial integrator step
  double hmax = 1e-2;      // step ceiling (also capped by the grid span)
  double floor = 1e-10;    // stop once the correlation norms fall below this
  double tau_cap = 2e5;    // hard stop; exceeded means non-decaying dynamics
  double step_scale = 1.0; // multiplies h0 and hmax (for convergence studies)
};

struct TimeDomainDiag {
  double g0_real = 0.0;  // integrand value at tau = 0 (covariance combination)
  double tau_max = 0.0;
  long long steps = 0;
};

// Independent verification path: integrates the regression ODE with
// fixed-step RK4 (the step doubles each time the correlation norm has decayed
// by 4x, up to hmax) and Fourier-transforms the weighted combination by
// composite trapezoidal quadrature over the sampled segments.
SpectrumResult time_domain_spectrum_oracle(const SystemParams& params,
                                           std::span<const double> omega_grid,
                                           double theta, double phi,
                                           Transition transition,
                                           const TimeDomainOptions& opt = {},
                                           TimeDomainDiag* diag = nullptr);

// Driven two-level atom pushed through the same Liouvillian -> resolvent
// pipeline (3-dimensional reduced space).  Sidebands sit at
// +-sqrt(omega_rabi^2 + delta^2).
SpectrumResult two_level_spectrum_oracle(double omega_rabi, double delta,
                                         double gamma_tl, double theta,
                                         std::span<const double> omega_grid);

}  // namespace fluosq
