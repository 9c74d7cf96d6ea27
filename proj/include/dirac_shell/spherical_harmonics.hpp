#pragma once

#include <span>

#include "dirac_shell/types.hpp"

namespace dirac_shell {

/// Number of real spherical harmonics of degree <= max_degree.
constexpr int harmonic_count(int max_degree) { return (max_degree + 1) * (max_degree + 1); }

/// Flat index of Y_{l,m}, -l <= m <= l.
constexpr int harmonic_index(int l, int m) { return l * l + l + m; }

/// Orthonormal real spherical harmonics on the unit sphere evaluated at the
/// direction `unit` (need not be normalised exactly; only its direction is used
/// through x, y, z as given). Writes harmonic_count(max_degree) values into `out`.
void real_spherical_harmonics(int max_degree, const Vec3 &unit, std::span<double> out);

} // namespace dirac_shell
