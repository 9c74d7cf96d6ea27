#pragma once

#include "dirac_shell/types.hpp"

namespace dirac_shell {

// Pauli matrices sigma_1..sigma_3. Throws std::out_of_range for j outside 1..3.
PauliMatrix pauli(int j);

// alpha_j = (0 sigma_j; sigma_j 0).
SpinorMatrix dirac_alpha(int j);

// beta = diag(I_2, -I_2).
SpinorMatrix dirac_beta();

// Sum_j v_j alpha_j.
SpinorMatrix alpha_dot(const Vec3 &v);
SpinorMatrix alpha_dot(const CVec3 &v);

inline SpinorMatrix identity4() { return SpinorMatrix::Identity(); }

// {a, b} = ab + ba
inline SpinorMatrix anticommutator(const SpinorMatrix &a, const SpinorMatrix &b) {
  return a * b + b * a;
}

// Largest absolute entry; used for zero-tolerance identity checks.
double max_abs_entry(const SpinorMatrix &a);

// Spin part of the rotation by `angle` about the z axis acting on C^4:
// diag(u, u) with u = exp(-i angle sigma_3 / 2). Satisfies
// U (alpha.x) U^* = alpha.(R x) and U beta U^* = beta.
SpinorMatrix spin_rotation_z(double angle);

} // namespace dirac_shell
