#include "fluosq/steady_state.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace fluosq {

namespace {
constexpr double kMaxCondition = 1e12;
}

SteadyState steady_state(const LiouvillianSystem& sys) {
  Eigen::PartialPivLU<Mat15> lu(sys.M);
  const double rc = lu.rcond();
  if (!(rc > 1.0 / kMaxCondition)) {
    throw NumericalError(
        "steady_state: no unique steady state (Liouvillian singular or "
        "ill-conditioned, rcond = " +
        std::to_string(rc) + ")");
  }
  Vec15 psi = lu.solve((-sys.C).eval());
  return {psi, psi_to_rho(psi)};
}

Mat4c analytic_steady_state(const SystemParams& params) {
  params.validate();
  const double g = params.gamma;
  const double oa = params.omega_a;
  const double ob = params.omega_b;
  const double d = params.delta;
  const double gg = g * g + 4.0 * d * d;
  const double oa2 = oa * oa, ob2 = ob * ob;
  const double D = 2.0 * oa2 * (gg + 8.0 * oa2) + ob2 * gg;
  if (!(D > 0.0))
    throw std::domain_error("analytic_steady_state: both drives are off");

  Mat4c rho = Mat4c::Zero();
  rho(0, 0) = 4.0 * oa2 * oa2 / D;
  rho(1, 1) = rho(0, 0);
  rho(2, 2) = (4.0 * oa2 * oa2 + (oa2 + ob2) * gg) / D;
  rho(3, 3) = oa2 * (gg + 4.0 * oa2) / D;
  const Complex r13 = 4.0 * oa2 * oa * Complex(d, -g / 2.0) / D;
  rho(0, 2) = r13;
  rho(2, 0) = std::conj(r13);
  rho(1, 3) = -r13;
  rho(3, 1) = std::conj(-r13);
  const Complex r23 = -4.0 * oa2 * ob * Complex(d, -g / 2.0) / D;
  rho(1, 2) = r23;
  rho(2, 1) = std::conj(r23);
  const double r34 = oa * ob * gg / D;
  rho(2, 3) = r34;
  rho(3, 2) = r34;
  return rho;
}

double density_matrix_violation(const Mat4c& rho, double tol, double psd_tol) {
  double worst = 0.0;
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) worst = std::max(worst, herm);
  const double tr = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (tr > tol) worst = std::max(worst, tr);
  Eigen::SelfAdjointEigenSolver<Mat4c> es((rho + rho.adjoint()) / 2.0);
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin < -psd_tol) worst = std::max(worst, -lmin);
  return worst;
}

}  // namespace fluosq
