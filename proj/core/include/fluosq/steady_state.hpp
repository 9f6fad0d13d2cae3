#pragma once

#include "fluosq/liouville.hpp"
#include "fluosq/params.hpp"
#include "fluosq/types.hpp"

namespace fluosq {

struct SteadyState {
  Vec15 psi;  // -M^{-1} C
  Mat4c rho;  // reconstructed density matrix, rho22 from the trace condition
};

// Dense LU solve of M psi = -C.  Rejects ill-conditioned systems (condition
// estimate above 1e12) instead of returning a garbage solve; with both drives
// off the ground manifold is undriven and M is singular.
SteadyState steady_state(const LiouvillianSystem& sys);

// Closed-form steady state.  Independent of gamma12 and of the drive phases;
// serves as the oracle for the numeric solve.
Mat4c analytic_steady_state(const SystemParams& params);

// Density-matrix sanity: Hermitian and unit trace to `tol`, eigenvalues above
// -psd_tol.  Returns the largest violation found (0 when clean).
double density_matrix_violation(const Mat4c& rho, double tol = 1e-12,
                                double psd_tol = 1e-10);

}  // namespace fluosq
