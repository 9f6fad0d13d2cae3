#include "fluosq/dressed.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "fluosq/liouville.hpp"
#include "fluosq/steady_state.hpp"

namespace fluosq {

namespace {

// Secular treatment is only trusted well above the natural linewidth.
constexpr double kSecularFloor = 5.0;

Eigen::Vector4d closed_form_state(double lambda, double denom, double oa,
                                  double ob, double delta) {
  Eigen::Vector4d v;
  v(0) = lambda;
  v(1) = lambda * oa * ob / denom;
  v(2) = oa;
  v(3) = -lambda * ob * (delta + lambda) / denom;
  v.normalize();
  return v;
}

}  // namespace

DressedBasis dressed_basis(const SystemParams& params) {
  params.validate();
  const double oa = params.omega_a, ob = params.omega_b, d = params.delta;
  if (!(oa > 0.0))
    throw std::domain_error("dressed_basis: omega_a must be positive");
  if (!(ob > 0.0))
    throw std::domain_error(
        "dressed_basis: degenerate dressed basis at omega_b = 0 "
        "(omega1 = omega2); the closed-form coefficients are not unique");

  const double R = std::hypot(2.0 * oa, ob);
  const double omega1 = R + ob;
  const double omega2 = 4.0 * oa * oa / (R + ob);  // R - ob without cancellation

  if (std::max(std::abs(d), omega1) < kSecularFloor * params.gamma)
    throw std::domain_error(
        "dressed_basis: outside the strong-field regime "
        "(need |delta| or omega1 >= 5 gamma)");

  const double s1 = std::hypot(d, omega1);
  const double s2 = std::hypot(d, omega2);

  DressedBasis basis;
  basis.params = params;
  basis.omega1 = omega1;
  basis.omega2 = omega2;
  basis.lambda_alpha = -(s1 + d) / 2.0;
  basis.lambda_beta = -(s2 + d) / 2.0;
  basis.lambda_kappa = (s2 - d) / 2.0;
  basis.lambda_mu = (s1 - d) / 2.0;

  // lambda (delta + lambda) - omega_a^2 evaluates to +-omega_b omega_{1,2}/2;
  // used in that closed form to dodge cancellation at small omega_a.
  const double denom_outer = ob * omega1 / 2.0;   // alpha, mu
  const double denom_inner = -ob * omega2 / 2.0;  // beta, kappa
  const double scale = std::max({1.0, oa * oa, std::abs(d) * omega1});
  if (std::abs(denom_inner) > 1e-13 * scale) {
    basis.coeffs.row(kAlpha) =
        closed_form_state(basis.lambda_alpha, denom_outer, oa, ob, d).transpose();
    basis.coeffs.row(kBeta) =
        closed_form_state(basis.lambda_beta, denom_inner, oa, ob, d).transpose();
    basis.coeffs.row(kKappa) =
        closed_form_state(basis.lambda_kappa, denom_inner, oa, ob, d).transpose();
    basis.coeffs.row(kMu) =
        closed_form_state(basis.lambda_mu, denom_outer, oa, ob, d).transpose();
  } else {
    // Numerical fallback: diagonalize the Hamiltonian, match eigenvalues to
    // the closed forms, and fix signs to the conventions of the closed-form
    // coefficients (component 3 carries N * omega_a > 0 for alpha and beta;
    // kappa and mu follow from the coefficient relations).
    Eigen::SelfAdjointEigenSolver<Mat4d> es(build_hamiltonian(params));
    auto pick = [&](double lambda) {
      int best = 0;
      double dist = std::abs(es.eigenvalues()(0) - lambda);
      for (int i = 1; i < 4; ++i) {
        const double di = std::abs(es.eigenvalues()(i) - lambda);
        if (di < dist) { dist = di; best = i; }
      }
      Eigen::Vector4d v = es.eigenvectors().col(best);
      if (v(2) < 0.0) v = -v;
      return v;
    };
    const Eigen::Vector4d va = pick(basis.lambda_alpha);
    const Eigen::Vector4d vb = pick(basis.lambda_beta);
    basis.coeffs.row(kAlpha) = va.transpose();
    basis.coeffs.row(kBeta) = vb.transpose();
    basis.coeffs.row(kKappa) << vb(3), -vb(2), vb(1), -vb(0);
    basis.coeffs.row(kMu) << -va(3), va(2), -va(1), va(0);
  }
  return basis;
}

TransitionFrequencies transition_frequencies(const DressedBasis& b) {
  TransitionFrequencies f;
  f.mu_alpha = b.lambda_mu - b.lambda_alpha;
  f.mu_beta = b.lambda_mu - b.lambda_beta;
  f.mu_kappa = b.lambda_mu - b.lambda_kappa;
  f.kappa_alpha = b.lambda_kappa - b.lambda_alpha;
  f.kappa_beta = b.lambda_kappa - b.lambda_beta;
  f.beta_alpha = b.lambda_beta - b.lambda_alpha;
  f.mu_kappa_coincides_beta_alpha = true;  // both equal (s1 - s2)/2
  return f;
}

DressedRates dressed_rates(const DressedBasis& basis, const SystemParams& params) {
  const double g = params.gamma;
  const double g12 = params.gamma12();
  const double a1 = basis.coeffs(kAlpha, 0), a2 = basis.coeffs(kAlpha, 1),
               a3 = basis.coeffs(kAlpha, 2), a4 = basis.coeffs(kAlpha, 3);
  const double b1 = basis.coeffs(kBeta, 0), b2 = basis.coeffs(kBeta, 1),
               b3 = basis.coeffs(kBeta, 2), b4 = basis.coeffs(kBeta, 3);

  DressedRates r;
  auto& G = r.gamma;
  G[0] = g / 6.0 * (4.0 * (a1 * a1 * a3 * a3 + a2 * a2 * a3 * a3 + a1 * a1 * a4 * a4) + 3.0) -
         2.0 * g12 * a1 * a1 * a3 * a3;
  G[1] = g / 6.0 * (4.0 * (b1 * b1 * b3 * b3 + b2 * b2 * b3 * b3 + b1 * b1 * b4 * b4) + 3.0) -
         2.0 * g12 * b1 * b1 * b3 * b3;
  G[2] = g / 6.0 * (3.0 * (b1 * b1 + b2 * b2 + a3 * a3 + a4 * a4) - 4.0 * a1 * a3 * b1 * b3) -
         2.0 * g12 * a1 * a3 * b1 * b3;
  G[3] = 2.0 * g / 3.0 * (a1 * a1 * b4 * b4 + a2 * a2 * b3 * b3 - a1 * a2 * b3 * b4) -
         g12 * (a1 * a1 * b3 * b3 + a2 * a2 * b4 * b4);
  G[4] = g / 6.0 * (3.0 * (a1 * a1 + a2 * a2 + b3 * b3 + b4 * b4) - 4.0 * a1 * a3 * b1 * b3) -
         2.0 * g12 * a1 * a3 * b1 * b3;
  G[5] = 2.0 * g / 3.0 * (a3 * a3 * b2 * b2 + a4 * a4 * b1 * b1 - a3 * a4 * b1 * b2) -
         g12 * (a3 * a3 * b1 * b1 + a4 * a4 * b2 * b2);
  G[6] = g / 6.0 * (3.0 * (a3 * a3 + a4 * a4 + b3 * b3 + b4 * b4) + 4.0 * a1 * a3 * b1 * b3) +
         2.0 * g12 * a1 * a3 * b1 * b3;
  G[7] = -g / 6.0 * (4.0 * a1 * a1 * b1 * b1 + 3.0 * (a4 * b1 - a3 * b2) * (a4 * b1 - a3 * b2) +
                     3.0 * (a2 * b3 - a1 * b4) * (a2 * b3 - a1 * b4)) +
         g12 * (a1 * a1 * b2 * b2 + a2 * a2 * b1 * b1);
  G[8] = g / 6.0 * (3.0 * (a1 * a1 + a2 * a2 + b1 * b1 + b2 * b2) + 4.0 * a1 * a3 * b1 * b3) +
         2.0 * g12 * a1 * a3 * b1 * b3;
  G[9] = -g / 6.0 * (4.0 * a3 * a3 * b3 * b3 + 3.0 * (a4 * b1 - a3 * b2) * (a4 * b1 - a3 * b2) +
                     3.0 * (a2 * b3 - a1 * b4) * (a2 * b3 - a1 * b4)) +
         g12 * (a3 * a3 * b4 * b4 + a4 * a4 * b3 * b3);

  // Effective widths of the coupled coherence pairs (printed branch: the
  // eigenvalues of the damping blocks; both come out negative here).
  r.discriminant = (G[6] - G[8]) * (G[6] - G[8]) + 4.0 * G[7] * G[9];
  r.discriminant_tilde = (G[2] - G[4]) * (G[2] - G[4]) + 4.0 * G[3] * G[5];
  if (r.discriminant < 0.0 || r.discriminant_tilde < 0.0) {
    r.complex_widths = true;
    r.width_plus = r.width_minus = -(G[6] + G[8]) / 2.0;
    r.width_tilde_plus = r.width_tilde_minus = -(G[2] + G[4]) / 2.0;
    return r;
  }
  const double root = std::sqrt(r.discriminant);
  const double root_t = std::sqrt(r.discriminant_tilde);
  r.width_plus = (-(G[6] + G[8]) + root) / 2.0;
  r.width_minus = (-(G[6] + G[8]) - root) / 2.0;
  r.width_tilde_plus = (-(G[2] + G[4]) + root_t) / 2.0;
  r.width_tilde_minus = (-(G[2] + G[4]) - root_t) / 2.0;
  return r;
}

std::array<double, 4> dressed_populations(const DressedBasis& basis,
                                          const Mat4c& rho_ss) {
  std::array<double, 4> pops{};
  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector4d v = basis.state(i);
    const Complex p = v.cast<Complex>().dot(rho_ss * v.cast<Complex>());
    pops[i] = p.real();
  }
  return pops;
}

DressedModel dressed_model(const SystemParams& params, const Mat4c& rho_ss) {
  DressedModel m;
  m.basis = dressed_basis(params);
  m.rates = dressed_rates(m.basis, params);
  m.populations = dressed_populations(m.basis, rho_ss);
  return m;
}

DressedModel dressed_model(const SystemParams& params) {
  const SteadyState ss = steady_state(build_liouvillian(params));
  return dressed_model(params, ss.rho);
}

namespace {

// F/G combinations shared by the pi and sigma coupled-pair weights.
struct PairCombos {
  double f_plus, f_minus, g_plus, g_minus;
  double ft_plus, ft_minus, gt_plus, gt_minus;
};

PairCombos pair_combos(const DressedModel& m) {
  const auto& G = m.rates.gamma;
  const double raa = m.populations[kAlpha], rbb = m.populations[kBeta],
               rkk = m.populations[kKappa], rmm = m.populations[kMu];
  const double gp = m.rates.width_plus, gm = m.rates.width_minus;
  const double gtp = m.rates.width_tilde_plus, gtm = m.rates.width_tilde_minus;
  const double u = G[6] - G[8] + 2.0 * G[7];
  const double v = G[8] - G[6] + 2.0 * G[9];
  const double ut = G[2] - G[4] - 2.0 * G[3];
  const double vt = G[4] - G[2] - 2.0 * G[5];
  PairCombos c;
  c.f_plus = u * raa + v * rkk + (gp - gm) * (raa + rkk);
  c.f_minus = -u * raa - v * rkk + (gp - gm) * (raa + rkk);
  c.g_plus = u * rbb + v * rmm + (gp - gm) * (rbb + rmm);
  c.g_minus = -u * rbb - v * rmm + (gp - gm) * (rbb + rmm);
  c.ft_plus = ut * raa + vt * rbb + (gtp - gtm) * (raa + rbb);
  c.ft_minus = -ut * raa - vt * rbb + (gtp - gtm) * (raa + rbb);
  c.gt_plus = ut * rkk + vt * rmm + (gtp - gtm) * (rkk + rmm);
  c.gt_minus = -ut * rkk - vt * rmm + (gtp - gtm) * (rkk + rmm);
  return c;
}

}  // namespace

PiSidebandWeights sideband_weights_pi(const DressedModel& m) {
  const double g = m.basis.params.gamma;
  const double a1 = m.basis.coeffs(kAlpha, 0), a2 = m.basis.coeffs(kAlpha, 1),
               a3 = m.basis.coeffs(kAlpha, 2), a4 = m.basis.coeffs(kAlpha, 3);
  const double b1 = m.basis.coeffs(kBeta, 0), b2 = m.basis.coeffs(kBeta, 1),
               b3 = m.basis.coeffs(kBeta, 2), b4 = m.basis.coeffs(kBeta, 3);
  const double gp = m.rates.width_plus, gm = m.rates.width_minus;
  const double gtp = m.rates.width_tilde_plus, gtm = m.rates.width_tilde_minus;
  if (gm == gp || gtm == gtp)
    throw NumericalError("sideband_weights_pi: degenerate effective widths");

  const PairCombos c = pair_combos(m);
  const double front = (a1 * b3 + a3 * b1 - a2 * b4 - a4 * b2);
  const double da = a1 * b3 - a2 * b4;
  const double db = a3 * b1 - a4 * b2;
  const double pref = g / (6.0 * (gm - gp)) * front;
  const double front_t = (a2 * b1 + a1 * b2 - a4 * b3 - a3 * b4);
  const double dat = a2 * b1 + a1 * b2;
  const double dbt = a4 * b3 + a3 * b4;
  const double pref_t = g / (6.0 * (gtm - gtp)) * front_t;

  PiSidebandWeights w;
  w.w_plus = pref * (da * c.f_plus + db * c.g_plus);
  w.w_minus = pref * (da * c.f_minus + db * c.g_minus);
  w.w_tilde_plus = pref_t * (dat * c.ft_plus - dbt * c.gt_plus);
  w.w_tilde_minus = pref_t * (dat * c.ft_minus - dbt * c.gt_minus);
  return w;
}

SigmaSidebandWeights sideband_weights_sigma(const DressedModel& m, double phi) {
  const double gs = m.basis.params.gamma_sigma();
  const double a1 = m.basis.coeffs(kAlpha, 0), a2 = m.basis.coeffs(kAlpha, 1),
               a3 = m.basis.coeffs(kAlpha, 2), a4 = m.basis.coeffs(kAlpha, 3);
  const double b1 = m.basis.coeffs(kBeta, 0), b2 = m.basis.coeffs(kBeta, 1),
               b3 = m.basis.coeffs(kBeta, 2), b4 = m.basis.coeffs(kBeta, 3);
  const double raa = m.populations[kAlpha], rbb = m.populations[kBeta],
               rkk = m.populations[kKappa], rmm = m.populations[kMu];
  const double gp = m.rates.width_plus, gm = m.rates.width_minus;
  if (gm == gp)
    throw NumericalError("sideband_weights_sigma: degenerate effective widths");
  const double c2 = std::cos(2.0 * phi);
  const double c4 = std::cos(4.0 * phi);
  const double cc = std::cos(phi) * std::cos(phi) * c2;

  SigmaSidebandWeights w;
  w.w1 = gs * ((a1 * a1 * a1 * a1 + a2 * a2 * a2 * a2) * raa +
               (a3 * a3 * a3 * a3 + a4 * a4 * a4 * a4) * rmm -
               a1 * a1 * a4 * a4 * (raa + rmm) -
               2.0 * c2 * (a1 * a1 * a2 * a2 * raa + a3 * a3 * a4 * a4 * rmm -
                           a1 * a1 * a3 * a3 * (raa + rmm)) -
               c4 * (a2 * a2 * a3 * a3 * (raa + rmm)));
  w.w2 = gs * ((b1 * b1 * b1 * b1 + b2 * b2 * b2 * b2) * rbb +
               (b3 * b3 * b3 * b3 + b4 * b4 * b4 * b4) * rkk -
               b1 * b1 * b4 * b4 * (rbb + rkk) -
               2.0 * c2 * (b1 * b1 * b2 * b2 * rbb + b3 * b3 * b4 * b4 * rkk -
                           b1 * b1 * b3 * b3 * (rbb + rkk)) -
               c4 * (b2 * b2 * b3 * b3 * (rbb + rkk)));

  const PairCombos c = pair_combos(m);
  const double ta = a1 * a1 * b4 * b4 + a2 * a2 * b3 * b3 + 2.0 * c2 * a1 * a2 * b3 * b4;
  const double tb = a3 * a3 * b2 * b2 + a4 * a4 * b1 * b1 + 2.0 * c2 * a3 * a4 * b1 * b2;
  const double tc = 4.0 * cc * a1 * a3 * b1 * b3;
  const double pref = gs / (2.0 * (gm - gp));
  w.w_plus = pref * (ta * c.f_plus + tb * c.g_plus - tc * (c.f_plus + c.g_plus));
  w.w_minus = pref * (ta * c.f_minus + tb * c.g_minus - tc * (c.f_minus + c.g_minus));
  return w;
}

namespace {

double lorentzian(double weight, double width, double x) {
  return weight * width / (width * width + x * x);
}

SpectrumResult make_dressed_result(const DressedModel& m,
                                   std::span<const double> grid, double theta,
                                   double phi, Transition tr) {
  SpectrumResult out;
  out.omega.assign(grid.begin(), grid.end());
  out.values.resize(grid.size());
  out.transition = tr;
  out.theta = theta;
  out.phi = phi;
  out.params = m.basis.params;
  out.method = Method::DressedApprox;
  return out;
}

}  // namespace

SpectrumResult sideband_spectrum_pi(const DressedModel& m,
                                    std::span<const double> omega_grid,
                                    double theta) {
  if (m.rates.complex_widths)
    throw NumericalError("sideband_spectrum_pi: complex effective widths");
  const bool in_phase = std::abs(theta) < 1e-12;
  const bool out_phase = std::abs(theta - std::numbers::pi / 2.0) < 1e-12;
  if (!in_phase && !out_phase)
    throw std::invalid_argument("sideband_spectrum_pi: theta must be 0 or pi/2");

  const TransitionFrequencies f = transition_frequencies(m.basis);
  const PiSidebandWeights w = sideband_weights_pi(m);
  SpectrumResult out =
      make_dressed_result(m, omega_grid, theta, m.basis.params.phi, Transition::Pi);
  for (std::size_t k = 0; k < out.omega.size(); ++k) {
    const double wv = out.omega[k];
    const double sgn = wv >= 0.0 ? 1.0 : -1.0;
    if (in_phase) {
      const double x = wv - sgn * f.mu_kappa;
      out.values[k] = lorentzian(w.w_plus, m.rates.width_plus, x) +
                      lorentzian(w.w_minus, m.rates.width_minus, x);
    } else {
      const double x = wv - sgn * f.mu_beta;
      out.values[k] = lorentzian(w.w_tilde_plus, m.rates.width_tilde_plus, x) +
                      lorentzian(w.w_tilde_minus, m.rates.width_tilde_minus, x);
    }
  }
  return out;
}

SpectrumResult sideband_spectrum_sigma(const DressedModel& m,
                                       std::span<const double> omega_grid,
                                       double phi) {
  if (m.rates.complex_widths)
    throw NumericalError("sideband_spectrum_sigma: complex effective widths");
  const TransitionFrequencies f = transition_frequencies(m.basis);
  const SigmaSidebandWeights w = sideband_weights_sigma(m, phi);
  SpectrumResult out = make_dressed_result(m, omega_grid, 0.0, phi, Transition::Sigma);
  for (std::size_t k = 0; k < out.omega.size(); ++k) {
    const double wv = out.omega[k];
    const double sgn = wv >= 0.0 ? 1.0 : -1.0;
    out.values[k] =
        lorentzian(w.w1, m.rates.gamma[0], wv - sgn * f.mu_alpha) +
        lorentzian(w.w2, m.rates.gamma[1], wv - sgn * f.kappa_beta) +
        lorentzian(w.w_plus, m.rates.width_plus, wv - sgn * f.mu_kappa) +
        lorentzian(w.w_minus, m.rates.width_minus, wv - sgn * f.mu_kappa);
  }
  return out;
}

}  // namespace fluosq
