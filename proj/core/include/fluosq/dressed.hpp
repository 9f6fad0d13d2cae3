#pragma once

#include <array>
#include <span>

#include "fluosq/params.hpp"
#include "fluosq/spectra.hpp"
#include "fluosq/types.hpp"

namespace fluosq {

// Dressed-state machinery for the strong-field regime.  The interaction
// Hamiltonian has four eigenstates |alpha>, |beta>, |kappa>, |mu| with
// eigenvalues ordered lambda_alpha <= lambda_beta < lambda_kappa <= lambda_mu
// fixed by the closed forms (not by a numerical sort), so the sign relations
// among the expansion coefficients hold with their printed signs.

struct DressedBasis {
  double lambda_alpha, lambda_beta, lambda_kappa, lambda_mu;
  // coeffs(i, k): expansion of dressed state i over bare states k.
  // Row order: alpha, beta, kappa, mu.  Rows are unit vectors.
  Mat4d coeffs;
  double omega1, omega2;  // effective Rabi frequencies, omega1 >= omega2
  SystemParams params;

  Eigen::Vector4d state(int i) const { return coeffs.row(i).transpose(); }
};

// Indices into DressedBasis rows / population arrays.
inline constexpr int kAlpha = 0, kBeta = 1, kKappa = 2, kMu = 3;

// Closed-form eigensystem.  Requires omega_a > 0 and omega_b > 0 (at
// omega_b = 0 the two doublets degenerate and the basis is not unique) and
// refuses the weak-field regime where the secular treatment breaks down
// (max(|delta|, omega1) < 5 gamma).  If a coefficient denominator underflows
// the basis falls back to numerically diagonalizing the Hamiltonian.
DressedBasis dressed_basis(const SystemParams& params);

struct TransitionFrequencies {
  double mu_alpha, mu_beta, mu_kappa, kappa_alpha, kappa_beta, beta_alpha;
  // mu_kappa == beta_alpha identically; flagged for consumers that fold the
  // two coupled coherences into one pair of sidebands.
  bool mu_kappa_coincides_beta_alpha = true;
};

TransitionFrequencies transition_frequencies(const DressedBasis& basis);

struct DressedRates {
  std::array<double, 10> gamma;  // gamma[i] = Gamma_{i+1} of the coherence EOMs
  double width_plus, width_minus;              // from Gamma_7, Gamma_9, Gamma_8*Gamma_10
  double width_tilde_plus, width_tilde_minus;  // from Gamma_3, Gamma_5, Gamma_4*Gamma_6
  bool complex_widths = false;   // negative discriminant: widths form complex pairs
  double discriminant = 0.0, discriminant_tilde = 0.0;
};

// Secular decay rates of the six dressed coherences and the effective widths
// of the coupled pairs.  When a discriminant is negative the real parts are
// stored, complex_widths is set, and the Lorentzian evaluators refuse.
DressedRates dressed_rates(const DressedBasis& basis, const SystemParams& params);

// Projections <Phi| rho_ss |Phi>; order alpha, beta, kappa, mu.  Non-negative
// and summing to one.
std::array<double, 4> dressed_populations(const DressedBasis& basis,
                                          const Mat4c& rho_ss);

// Aggregate used by the sideband evaluators.
struct DressedModel {
  DressedBasis basis;
  DressedRates rates;
  std::array<double, 4> populations;
};

DressedModel dressed_model(const SystemParams& params, const Mat4c& rho_ss);
DressedModel dressed_model(const SystemParams& params);  // solves its own steady state

struct PiSidebandWeights {
  double w_plus, w_minus;              // in-phase pair at +-omega_mu_kappa
  double w_tilde_plus, w_tilde_minus;  // out-of-phase pair at +-omega_mu_beta
};

PiSidebandWeights sideband_weights_pi(const DressedModel& model);

struct SigmaSidebandWeights {
  double w1;             // single transition mu <-> alpha
  double w2;             // single transition kappa <-> beta
  double w_plus, w_minus;  // coupled pair at +-omega_mu_kappa
};

// phi-dependent through cos(2 phi), cos(4 phi) and cos^2(phi) cos(2 phi); all
// weights have period pi in phi.
SigmaSidebandWeights sideband_weights_sigma(const DressedModel& model, double phi);

// Lorentzian sideband approximations.  Valid near the sidebands only (the
// central peak is outside the treatment); the positive branch is used for
// omega >= 0 and the negative branch otherwise.  theta must be 0 or pi/2.
SpectrumResult sideband_spectrum_pi(const DressedModel& model,
                                    std::span<const double> omega_grid,
                                    double theta);
SpectrumResult sideband_spectrum_sigma(const DressedModel& model,
                                       std::span<const double> omega_grid,
                                       double phi);

}  // namespace fluosq
