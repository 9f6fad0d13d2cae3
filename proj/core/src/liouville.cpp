#include "fluosq/liouville.hpp"

namespace fluosq {

namespace {
constexpr Complex kI{0.0, 1.0};
}

// Bloch equations of the driven atom, written on the slots of psi.
// Population rows carry the rho22 elimination, which generates C.
LiouvillianSystem build_liouvillian(const SystemParams& params) {
  params.validate();
  const double g1 = params.gamma1();
  const double g2 = params.gamma2();
  const double gs = params.gamma_sigma();
  const double g12 = params.gamma12();
  const double oa = params.omega_a;
  const double ob = params.omega_b;
  const double d = params.delta;

  Mat15 M = Mat15::Zero();
  Vec15 C = Vec15::Zero();

  // slots: 0 <A11>  1 <A33>  2 <A44>  3 <A12>  4 <A21>  5 <A13>  6 <A31>
  //        7 <A23>  8 <A32>  9 <A14> 10 <A41> 11 <A24> 12 <A42> 13 <A34> 14 <A43>

  // d<A11>/dt = rho11'
  M(0, 0) = -(g1 + gs);
  M(0, 5) = -kI * oa;
  M(0, 6) = kI * oa;
  M(0, 9) = kI * ob;
  M(0, 10) = -kI * ob;

  // d<A33>/dt = rho33', rho22 eliminated
  M(1, 0) = g1 - gs;
  M(1, 1) = -gs;
  M(1, 2) = -gs;
  M(1, 5) = kI * oa;
  M(1, 6) = -kI * oa;
  C(1) = gs;

  // d<A44>/dt = rho44'
  M(2, 0) = gs - g2;
  M(2, 1) = -g2;
  M(2, 2) = -g2;
  M(2, 9) = -kI * ob;
  M(2, 10) = kI * ob;
  M(2, 11) = -kI * oa;
  M(2, 12) = kI * oa;
  C(2) = g2;

  // d<A12>/dt = rho21'
  M(3, 3) = -(g1 + g2) / 2.0 - gs;
  M(3, 8) = kI * oa;
  M(3, 9) = kI * oa;
  M(3, 12) = -kI * ob;

  // d<A21>/dt = rho12'
  M(4, 4) = -(g1 + g2) / 2.0 - gs;
  M(4, 7) = -kI * oa;
  M(4, 10) = -kI * oa;
  M(4, 11) = kI * ob;

  // d<A13>/dt = rho31'
  M(5, 5) = -(g1 + gs) / 2.0 - kI * d;
  M(5, 0) = -kI * oa;
  M(5, 1) = kI * oa;
  M(5, 14) = -kI * ob;

  // d<A31>/dt = rho13'
  M(6, 6) = -(g1 + gs) / 2.0 + kI * d;
  M(6, 0) = kI * oa;
  M(6, 1) = -kI * oa;
  M(6, 13) = kI * ob;

  // d<A23>/dt = rho32'
  M(7, 7) = -(g2 + gs) / 2.0 - kI * d;
  M(7, 4) = -kI * oa;
  M(7, 14) = -kI * oa;

  // d<A32>/dt = rho23'
  M(8, 8) = -(g2 + gs) / 2.0 + kI * d;
  M(8, 3) = kI * oa;
  M(8, 13) = kI * oa;

  // d<A14>/dt = rho41'
  M(9, 9) = -(g1 + gs) / 2.0 - kI * d;
  M(9, 3) = kI * oa;
  M(9, 13) = kI * oa;
  M(9, 0) = kI * ob;
  M(9, 2) = -kI * ob;

  // d<A41>/dt = rho14'
  M(10, 10) = -(g1 + gs) / 2.0 + kI * d;
  M(10, 4) = -kI * oa;
  M(10, 14) = -kI * oa;
  M(10, 0) = -kI * ob;
  M(10, 2) = kI * ob;

  // d<A24>/dt = rho42', rho22 eliminated
  M(11, 11) = -(g2 + gs) / 2.0 - kI * d;
  M(11, 0) = -kI * oa;
  M(11, 1) = -kI * oa;
  M(11, 2) = -2.0 * kI * oa;
  M(11, 4) = kI * ob;
  C(11) = kI * oa;

  // d<A42>/dt = rho24'
  M(12, 12) = -(g2 + gs) / 2.0 + kI * d;
  M(12, 0) = kI * oa;
  M(12, 1) = kI * oa;
  M(12, 2) = 2.0 * kI * oa;
  M(12, 3) = -kI * ob;
  C(12) = -kI * oa;

  // d<A34>/dt = rho43'  (cross-damping feed from rho21)
  M(13, 3) = g12;
  M(13, 8) = kI * oa;
  M(13, 9) = kI * oa;
  M(13, 6) = kI * ob;

  // d<A43>/dt = rho34'  (cross-damping feed from rho12)
  M(14, 4) = g12;
  M(14, 7) = -kI * oa;
  M(14, 10) = -kI * oa;
  M(14, 5) = -kI * ob;

  return {M, C, params};
}

Mat4d build_hamiltonian(const SystemParams& params) {
  params.validate();
  Mat4d H = Mat4d::Zero();
  H(0, 0) = -params.delta;
  H(1, 1) = -params.delta;
  H(0, 2) = params.omega_a;
  H(2, 0) = params.omega_a;
  H(1, 3) = -params.omega_a;
  H(3, 1) = -params.omega_a;
  H(0, 3) = -params.omega_b;
  H(3, 0) = -params.omega_b;
  return H;
}

Vec15 rho_to_psi(const Mat4c& rho) {
  Vec15 psi;
  for (int k = 0; k < kDim; ++k) {
    const auto [m, n] = liouville_index::labels[k];
    psi(k) = rho(n - 1, m - 1);  // <A_mn> = rho_nm
  }
  return psi;
}

Mat4c psi_to_rho(const Vec15& psi) {
  Mat4c rho = Mat4c::Zero();
  for (int k = 0; k < kDim; ++k) {
    const auto [m, n] = liouville_index::labels[k];
    rho(n - 1, m - 1) = psi(k);
  }
  rho(1, 1) = 1.0 - rho(0, 0) - rho(2, 2) - rho(3, 3);
  return rho;
}

}  // namespace fluosq
