#pragma once

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dirac_shell {

/// a + b i with rational parts.
struct GaussianRational {
  mpq_class re, im;

  friend GaussianRational operator+(const GaussianRational &x, const GaussianRational &y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator*(const GaussianRational &x, const GaussianRational &y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  bool operator==(const GaussianRational &o) const { return re == o.re && im == o.im; }
};

using ExactMatrix4 = std::array<std::array<GaussianRational, 4>, 4>;

ExactMatrix4 exact_identity();
ExactMatrix4 exact_alpha(int j);
ExactMatrix4 exact_beta();
/// Sum_j n_j alpha_j for rational n.
ExactMatrix4 exact_alpha_dot(const std::array<mpq_class, 3> &n);
ExactMatrix4 operator*(const ExactMatrix4 &a, const ExactMatrix4 &b);
ExactMatrix4 operator+(const ExactMatrix4 &a, const ExactMatrix4 &b);
ExactMatrix4 scaled(const ExactMatrix4 &a, const mpq_class &s);
bool is_zero(const ExactMatrix4 &a);

struct NamedCheck {
  std::string name;
  bool passed = false;
};

/// alpha_j alpha_k + alpha_k alpha_j = 2 delta_jk, alpha_j beta + beta alpha_j = 0,
/// beta^2 = 1, (alpha.N)^2 = 1 and {beta, alpha.N} = 0 for rational unit normals,
/// all in exact arithmetic.
std::vector<NamedCheck> exact_clifford_checks();

/// Rational points on the unit sphere used by the exact checks.
std::vector<std::array<mpq_class, 3>> rational_unit_normals();

} // namespace dirac_shell
