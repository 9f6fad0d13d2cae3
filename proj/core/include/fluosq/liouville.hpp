#pragma once

#include <array>
#include <utility>

#include "fluosq/params.hpp"
#include "fluosq/types.hpp"

namespace fluosq {

// Ordering of the 15 retained operator expectations <A_mn> = rho_nm.  The
// excited population rho22 is eliminated through Tr(rho) = 1, which turns the
// homogeneous master equation into dpsi/dt = M psi + C.
//
//   slot  0..2 : (1,1) (3,3) (4,4)           populations
//   slot  3..14: (1,2)(2,1) (1,3)(3,1) (2,3)(3,2) (1,4)(4,1) (2,4)(4,2) (3,4)(4,3)
namespace liouville_index {

inline constexpr std::array<std::pair<int, int>, kDim> labels{{
    {1, 1}, {3, 3}, {4, 4}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3},
    {3, 2}, {1, 4}, {4, 1}, {2, 4}, {4, 2}, {3, 4}, {4, 3},
}};

// Slot of <A_mn>, or -1 if the element is not carried (the eliminated (2,2),
// diagonal conventions aside).
constexpr int slot(int m, int n) {
  for (int k = 0; k < kDim; ++k)
    if (labels[k].first == m && labels[k].second == n) return k;
  return -1;
}

// Slot holding the conjugate partner: <A_nm> = conj(<A_mn>).
constexpr int conjugate_slot(int k) {
  return slot(labels[k].second, labels[k].first);
}

}  // namespace liouville_index

// The reduced Liouvillian: dpsi/dt = M psi + C with psi ordered as above.
struct LiouvillianSystem {
  Mat15 M;
  Vec15 C;
  SystemParams params;
};

// Assemble M and C from the Bloch equations of the driven four-level atom.
// The only gamma12 entries are the feeds of the ground-state coherence from
// the excited-state coherence (rows of <A_34>, <A_43>).
LiouvillianSystem build_liouvillian(const SystemParams& params);

// Interaction-picture Hamiltonian over the bare states |1>..|4> (hbar = 1):
// diag(-delta,-delta,0,0), +omega_a on (1,3), -omega_a on (2,4), -omega_b on
// (1,4), plus transposes.  Real symmetric.
Mat4d build_hamiltonian(const SystemParams& params);

// Map a 4x4 density matrix to the 15-vector of expectations and back.  The
// reverse direction restores rho22 from the trace condition.
Vec15 rho_to_psi(const Mat4c& rho);
Mat4c psi_to_rho(const Vec15& psi);

}  // namespace fluosq
