#include <doctest.h>

#include "dirac_shell/dirac_algebra.hpp"
#include "dirac_shell/exact_clifford.hpp"

using namespace dirac_shell;

TEST_CASE("alpha and beta anticommute with zero tolerance") {
  const SpinorMatrix id = identity4();
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k)
      CHECK(max_abs_entry(anticommutator(dirac_alpha(j), dirac_alpha(k)) -
                          (j == k ? 2.0 : 0.0) * id) == 0.0);
    CHECK(max_abs_entry(anticommutator(dirac_alpha(j), dirac_beta())) == 0.0);
  }
  CHECK(max_abs_entry(dirac_beta() * dirac_beta() - id) == 0.0);
}

TEST_CASE("Pauli products") {
  const PauliMatrix s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);
  CHECK((s1 * s2 - kI * s3).cwiseAbs().maxCoeff() == 0.0);
  CHECK((s2 * s3 - kI * s1).cwiseAbs().maxCoeff() == 0.0);
  CHECK((s3 * s1 - kI * s2).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(pauli(0), std::out_of_range);
  CHECK_THROWS_AS(dirac_alpha(4), std::out_of_range);
}

TEST_CASE("alpha.N squares to |N|^2") {
  const Vec3 n = Vec3(0.3, -0.4, 1.2).normalized();
  CHECK(max_abs_entry(alpha_dot(n) * alpha_dot(n) - identity4()) < 1e-15);
  CHECK(max_abs_entry(anticommutator(dirac_beta(), alpha_dot(n))) == 0.0);
  const Vec3 axis(0, 0, -1);
  CHECK(max_abs_entry(alpha_dot(axis) * alpha_dot(axis) - identity4()) == 0.0);
}

TEST_CASE("spin rotation conjugates alpha") {
  const double t = 0.7;
  const SpinorMatrix u = spin_rotation_z(t);
  const Vec3 x(0.2, -1.1, 0.4);
  const Vec3 rx(std::cos(t) * x(0) - std::sin(t) * x(1), std::sin(t) * x(0) + std::cos(t) * x(1),
                x(2));
  CHECK(max_abs_entry(u * alpha_dot(x) * u.adjoint() - alpha_dot(rx)) < 1e-15);
  CHECK(max_abs_entry(u * dirac_beta() * u.adjoint() - dirac_beta()) < 1e-15);
}

TEST_CASE("exact Clifford identities") {
  for (const auto &c : exact_clifford_checks()) {
    INFO(c.name);
    CHECK(c.passed);
  }
  for (const auto &n : rational_unit_normals()) {
    CHECK(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] == 1);
    const ExactMatrix4 a = exact_alpha_dot(n);
    CHECK(is_zero(a * a + scaled(exact_identity(), -1)));
  }
  // A non-unit normal must fail.
  const ExactMatrix4 a = exact_alpha_dot({mpq_class(1), mpq_class(1), mpq_class(0)});
  CHECK_FALSE(is_zero(a * a + scaled(exact_identity(), -1)));
}
