#include "fluosq/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <thread>

namespace fluosq {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kRealityTol = 1e-10;

void check_reality(double worst_imag, const char* where) {
  if (!(worst_imag < kRealityTol))
    throw NumericalError(std::string(where) +
                         ": spectrum has a non-negligible imaginary residue");
}

// Weighted combinations entering the two spectra.  `a` and `b` are the
// resolvent- or time-evolved images of the covariance vectors.
Complex combine_pi(const Vec15& a, const Vec15& b, const SystemParams& p,
                   double theta) {
  const double g1 = p.gamma1(), g2 = p.gamma2(), g12 = p.gamma12();
  const Complex ph = std::exp(2.0 * kI * theta);
  return ph * (g1 * a(6) + g2 * b(12) + g12 * b(6) + g12 * a(12)) +
         g1 * a(5) + g2 * b(11) + g12 * b(5) + g12 * a(11);
}

Complex combine_sigma(const Vec15& a, const Vec15& b, const SystemParams& p,
                      double theta, double phi) {
  const Complex ph = std::exp(2.0 * kI * theta);
  const Complex e2m = std::exp(-2.0 * kI * phi);
  const Complex e4m = std::exp(-4.0 * kI * phi);
  const Complex e2p = std::exp(2.0 * kI * phi);
  return p.gamma_sigma() *
         (ph * (a(10) + e2m * b(10) + e2m * a(8) + e4m * b(8)) +
          a(9) + e2m * b(9) + e2p * a(7) + b(7));
}

void run_chunked(int n, const std::function<void(int, int)>& body) {
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int workers = std::clamp(hw, 1, std::max(1, n / 64));
  if (workers <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi);
  }
  for (auto& t : pool) t.join();
}

}  // namespace

std::string to_string(Transition t) {
  return t == Transition::Pi ? "pi" : "sigma";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::ExactResolvent: return "exact";
    case Method::TimeDomainOracle: return "oracle";
    case Method::DressedApprox: return "dressed";
  }
  return "?";
}

CovarianceSet initial_covariances(const Mat4c& rho_ss) {
  auto ev = [&](int a, int b) { return rho_ss(b - 1, a - 1); };  // <A_ab>
  auto column = [&](int m, int n) {
    Vec15 u;
    for (int j = 0; j < kDim; ++j) {
      const auto [p, q] = liouville_index::labels[j];
      // A_pq A_mn = delta_qm A_pn
      u(j) = (q == m ? ev(p, n) : Complex{0.0, 0.0}) - ev(p, q) * ev(m, n);
    }
    return u;
  };
  return {column(3, 1), column(4, 2), column(4, 1), column(3, 2)};
}

Mat15 resolvent(const Mat15& M, double omega) {
  const Mat15 plus = (kI * omega * Mat15::Identity() - M);
  const Mat15 minus = (-kI * omega * Mat15::Identity() - M);
  Eigen::PartialPivLU<Mat15> lup(plus), lum(minus);
  if (!(lup.rcond() > 1e-14) || !(lum.rcond() > 1e-14))
    throw NumericalError("resolvent: singular shift at omega = " +
                         std::to_string(omega));
  return lup.inverse() + lum.inverse();
}

namespace {

SpectrumResult exact_spectrum(const SystemParams& params,
                              std::span<const double> omega_grid, double theta,
                              double phi, Transition transition) {
  const LiouvillianSystem sys = build_liouvillian(params);
  const SteadyState ss = steady_state(sys);
  const CovarianceSet cov = initial_covariances(ss.rho);
  const Vec15& ua = transition == Transition::Pi ? cov.u31 : cov.u41;
  const Vec15& ub = transition == Transition::Pi ? cov.u42 : cov.u32;

  SpectrumResult out;
  out.omega.assign(omega_grid.begin(), omega_grid.end());
  out.values.resize(omega_grid.size());
  out.transition = transition;
  out.theta = theta;
  out.phi = phi;
  out.params = params;
  out.method = Method::ExactResolvent;

  double worst_imag = 0.0;
  for (std::size_t k = 0; k < omega_grid.size(); ++k) {
    const Mat15 N = resolvent(sys.M, omega_grid[k]);
    const Vec15 na = N * ua;
    const Vec15 nb = N * ub;
    const Complex v = transition == Transition::Pi
                          ? combine_pi(na, nb, params, theta)
                          : combine_sigma(na, nb, params, theta, phi);
    worst_imag = std::max(worst_imag, std::abs(v.imag()));
    out.values[k] = v.real();
  }
  check_reality(worst_imag, "squeezing_spectrum");
  return out;
}

}  // namespace

SpectrumResult squeezing_spectrum_pi(const SystemParams& params,
                                     std::span<const double> omega_grid,
                                     double theta, Vic vic) {
  const SystemParams p =
      vic == Vic::Off ? params.with_gamma12(Gamma12Policy::Off) : params;
  return exact_spectrum(p, omega_grid, theta, p.phi, Transition::Pi);
}

SpectrumResult squeezing_spectrum_sigma(const SystemParams& params,
                                        std::span<const double> omega_grid,
                                        double theta, double phi) {
  return exact_spectrum(params, omega_grid, theta, phi, Transition::Sigma);
}

SpectrumResult time_domain_spectrum_oracle(const SystemParams& params,
                                           std::span<const double> omega_grid,
                                           double theta, double phi,
                                           Transition transition,
                                           const TimeDomainOptions& opt,
                                           TimeDomainDiag* diag) {
  const LiouvillianSystem sys = build_liouvillian(params);
  const SteadyState ss = steady_state(sys);
  const CovarianceSet cov = initial_covariances(ss.rho);

  Eigen::ComplexEigenSolver<Mat15> es(sys.M, /*computeEigenvectors=*/false);
  if (!(es.eigenvalues().real().maxCoeff() < -1e-7))
    throw NumericalError(
        "time_domain_spectrum_oracle: correlations do not decay");

  using Pair = Eigen::Matrix<Complex, kDim, 2>;
  Pair U;
  U.col(0) = transition == Transition::Pi ? cov.u31 : cov.u41;
  U.col(1) = transition == Transition::Pi ? cov.u42 : cov.u32;

  auto g_of = [&](const Pair& u) {
    return transition == Transition::Pi
               ? combine_pi(u.col(0), u.col(1), params, theta)
               : combine_sigma(u.col(0), u.col(1), params, theta, phi);
  };

  double omega_span = 0.0;
  for (double w : omega_grid) omega_span = std::max(omega_span, std::abs(w));
  const double h0 = opt.h0 * opt.step_scale;
  const double hmax = std::min(opt.hmax * opt.step_scale,
                               0.2 / std::max(omega_span, 1e-9));

  // One segment = a run of constant step size; the step doubles whenever the
  // correlation norm has dropped another factor of four.
  struct Segment {
    double t0, h;
    std::vector<double> g;  // Re of the weighted combination at the nodes
  };
  std::vector<Segment> segments;
  const double norm0 = U.norm();
  double target = norm0 / 4.0;
  double h = std::min(h0, hmax);
  double tau = 0.0;
  long long steps = 0;
  segments.push_back({0.0, h, {g_of(U).real()}});
  const double g0 = segments.front().g.front();

  while (norm0 >= opt.floor) {
    const Pair k1 = sys.M * U;
    const Pair k2 = sys.M * (U + 0.5 * h * k1);
    const Pair k3 = sys.M * (U + 0.5 * h * k2);
    const Pair k4 = sys.M * (U + h * k3);
    U += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    tau += h;
    ++steps;
    segments.back().g.push_back(g_of(U).real());

    const double nn = U.norm();
    if (nn < opt.floor) break;
    if (tau > opt.tau_cap)
      throw NumericalError(
          "time_domain_spectrum_oracle: correlations decay too slowly");
    if (nn < target) {
      target = nn / 4.0;
      if (h < hmax) {
        h = std::min(2.0 * h, hmax);
        segments.push_back({tau, h, {segments.back().g.back()}});
      }
    }
  }

  SpectrumResult out;
  out.omega.assign(omega_grid.begin(), omega_grid.end());
  out.values.assign(omega_grid.size(), 0.0);
  out.transition = transition;
  out.theta = theta;
  out.phi = phi;
  out.params = params;
  out.method = Method::TimeDomainOracle;

  // S(w) = 2 * int_0^inf cos(w tau) Re g(tau) dtau, composite trapezoid.
  // Each omega is accumulated by a single worker in segment order, so the
  // result does not depend on the thread count.
  run_chunked(static_cast<int>(omega_grid.size()), [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const double w = out.omega[i];
      double acc = 0.0;
      for (const Segment& seg : segments) {
        const std::size_t n = seg.g.size();
        if (n < 2) continue;
        const Complex rot = std::exp(kI * (w * seg.h));
        Complex z = std::exp(kI * (w * seg.t0));
        double local = 0.5 * z.real() * seg.g.front();
        for (std::size_t k = 1; k + 1 < n; ++k) {
          z *= rot;
          if ((k & 4095u) == 0u)
            z = std::exp(kI * (w * (seg.t0 + static_cast<double>(k) * seg.h)));
          local += z.real() * seg.g[k];
        }
        z = std::exp(kI * (w * (seg.t0 + static_cast<double>(n - 1) * seg.h)));
        local += 0.5 * z.real() * seg.g.back();
        acc += seg.h * local;
      }
      out.values[i] = 2.0 * acc;
    }
  });

  if (diag) {
    diag->g0_real = g0;
    diag->tau_max = tau;
    diag->steps = steps;
  }
  return out;
}

SpectrumResult two_level_spectrum_oracle(double omega_rabi, double delta,
                                         double gamma_tl, double theta,
                                         std::span<const double> omega_grid) {
  if (!(gamma_tl > 0.0) || !std::isfinite(gamma_tl))
    throw std::invalid_argument("two_level_spectrum_oracle: gamma_tl must be > 0");
  if (!(omega_rabi >= 0.0) || !std::isfinite(omega_rabi) || !std::isfinite(delta))
    throw std::invalid_argument("two_level_spectrum_oracle: bad drive parameters");

  using Mat3 = Eigen::Matrix3cd;
  using Vec3 = Eigen::Vector3cd;
  // psi = (<A_ee>, <A_ge>, <A_eg>), rho_gg eliminated.
  // H = -delta |e><e| + (omega_rabi/2)(|e><g| + |g><e|).
  Mat3 M = Mat3::Zero();
  Vec3 C = Vec3::Zero();
  const double om = omega_rabi;
  M(0, 0) = -gamma_tl;
  M(0, 1) = kI * om / 2.0;
  M(0, 2) = -kI * om / 2.0;
  M(1, 1) = kI * delta - gamma_tl / 2.0;
  M(1, 0) = kI * om;
  C(1) = -kI * om / 2.0;
  M(2, 2) = -kI * delta - gamma_tl / 2.0;
  M(2, 0) = -kI * om;
  C(2) = kI * om / 2.0;

  Eigen::PartialPivLU<Mat3> lu(M);
  if (!(lu.rcond() > 1e-12))
    throw NumericalError("two_level_spectrum_oracle: singular Bloch matrix");
  const Vec3 psi = lu.solve((-C).eval());
  const Complex r_ee = psi(0), r_eg = psi(1), r_ge = psi(2);
  const Complex r_gg = 1.0 - r_ee;

  // <A_ab> lookup over {g,e}; rho in the (g,e) basis.
  auto ev = [&](int a, int b) -> Complex {
    if (a == 0 && b == 0) return r_gg;
    if (a == 1 && b == 1) return r_ee;
    if (a == 0 && b == 1) return r_eg;  // <A_ge> = rho_eg
    return r_ge;
  };
  // U^{ge}: second operator is the lowering A_ge; labels (e,e), (g,e), (e,g).
  const std::array<std::pair<int, int>, 3> labels{{{1, 1}, {0, 1}, {1, 0}}};
  Vec3 U;
  for (int j = 0; j < 3; ++j) {
    const auto [p, q] = labels[j];
    U(j) = (q == 0 ? ev(p, 1) : Complex{0.0, 0.0}) - ev(p, q) * ev(0, 1);
  }

  SpectrumResult out;
  out.omega.assign(omega_grid.begin(), omega_grid.end());
  out.values.resize(omega_grid.size());
  out.transition = Transition::Pi;
  out.theta = theta;
  out.method = Method::ExactResolvent;
  out.params.gamma = gamma_tl;
  out.params.omega_a = omega_rabi;
  out.params.delta = delta;
  out.params.theta = theta;

  const Complex ph = std::exp(2.0 * kI * theta);
  double worst_imag = 0.0;
  for (std::size_t k = 0; k < omega_grid.size(); ++k) {
    const double w = omega_grid[k];
    const Mat3 N = (kI * w * Mat3::Identity() - M).lu().inverse() +
                   (-kI * w * Mat3::Identity() - M).lu().inverse();
    const Vec3 nu = N * U;
    const Complex v = gamma_tl * (ph * nu(1) + nu(2));
    worst_imag = std::max(worst_imag, std::abs(v.imag()));
    out.values[k] = v.real();
  }
  check_reality(worst_imag, "two_level_spectrum_oracle");
  return out;
}

}  // namespace fluosq
