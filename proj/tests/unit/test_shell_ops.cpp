#include <doctest.h>

#include "dirac_shell/assembly.hpp"
#include "dirac_shell/shell_ops.hpp"

using namespace dirac_shell;

namespace {
const BoundaryOperator &coarse_c() {
  static const BoundaryOperator c =
      assemble_C(std::make_shared<const BoundarySample>(sphere_sample(1)), MassParameter(1.0));
  return c;
}
} // namespace

TEST_CASE("gamma and lambda_n' oracles") {
  CHECK(gauge_gamma({3, 1}, 0.0) == 8.0);
  CHECK(gauge_gamma({3, 1}, kPi) == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(gauge_lambda_n_prime({3, 1}, kPi) == doctest::Approx(-1.0));
  CHECK(gauge_gamma({1, std::sqrt(5.0)}, kPi / 2) == doctest::Approx(2 * std::sqrt(5.0) - 4));
  CHECK(gauge_gamma({0, 2}, kPi / 2) == 0.0);
}

TEST_CASE("shell operator domain errors") {
  const BoundaryOperator &c = coarse_c();
  CHECK_THROWS_AS(lambda_electrostatic({1, 1}, c), DomainError);
  CHECK_THROWS_AS(lambda_z({0, 2}, kPi / 2, c), DomainError);
  const SurfaceScalarField zero = SurfaceScalarField::constant(c.sample(), 0.0);
  CHECK_THROWS_AS(lambda_magnetic(zero, c), DomainError);
}

TEST_CASE("algebraic relations of the shell operators") {
  const BoundaryOperator &c = coarse_c();
  const CouplingParams p{3, 1};
  CHECK(plus_relation_residual(p, c) == 0.0);
  CHECK(electrostatic_potential_residual(p, c) < 1e-15);
  const SurfaceScalarField lam = SurfaceScalarField::from_function(
      c.sample(), [](const Vec3 &x) { return 2.0 + x(2); }, "2 + x3");
  CHECK(lam.min_abs() > 0.9);
  CHECK(magnetic_potential_residual(lam, c) < 1e-15);
  CHECK((lambda_z(p, 0.0, c).matrix() - lambda_electrostatic(p, c).matrix()).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK(intertwine_defect(p, 0.0, c) == 0.0);
  const double cal = intertwine_defect(p, kPi, c);
  CHECK(cal < 1e-7);
  CHECK(factorization_defect(p, c) < 1e-7);
  CHECK(factorization_defect({1, 0}, c) < 1e-7);
}

TEST_CASE("Fredholm gap proxy") {
  const BoundaryOperator &c = coarse_c();
  const double g = fredholm_gap(lambda_electrostatic({1, 0}, c));
  CHECK(g == doctest::Approx(0.4127).epsilon(1e-3));
}
