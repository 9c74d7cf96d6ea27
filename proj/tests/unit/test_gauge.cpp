#include <doctest.h>

#include "dirac_shell/gauge.hpp"

using namespace dirac_shell;

TEST_CASE("gauge right-hand side") {
  CHECK(std::abs(gauge_rhs(0, 2) - Complex(0, 1)) < 1e-16);
  CHECK(std::abs(std::abs(gauge_rhs(3.7, 0.4)) - 1.0) < 1e-15);
  CHECK(std::abs(boundary_coeff_check(0, 2)) < 1e-15);
  CHECK(std::abs(boundary_coeff_check(-1.5, 4.0)) < 1e-14);
  CHECK_THROWS_AS(boundary_coeff_check(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(boundary_coeff_check(-3.0, 1.0), DomainError);
}

TEST_CASE("theta unwrapping") {
  std::vector<double> lam;
  for (int k = 0; k <= 400; ++k)
    lam.push_back(6.0 * std::sin(2.0 * kPi * k / 400.0));
  const GaugeAngle g = theta_from_lambda(lam, 8.0);
  CHECK(g.reconstruction_error() < 1e-13);
  CHECK(g.max_step < kPi);
  for (std::size_t k = 1; k < g.theta.size(); ++k)
    CHECK(std::abs(g.theta[k] - g.theta[k - 1]) < 0.5);
  CHECK_THROWS_AS(theta_from_lambda(lam, 0.0), DomainError);
  CHECK_THROWS_AS(theta_from_lambda({1.0, -5.0}, 2.0), DomainError);
}

TEST_CASE("piecewise gauge group law") {
  const BoundarySample s = sphere_sample(1);
  const PiecewiseField f = PiecewiseField::straddle(s, 0.1, [](const Vec3 &x) {
    return SpinorVector(x(0), 1.0, Complex(0, x(2)), x(1));
  });
  const PiecewiseField g = u_z_apply(u_z_apply(f, 2.1), -2.1);
  for (std::size_t k = 0; k < f.size(); ++k)
    CHECK(g.value(k) == f.value(k));
  const PiecewiseField h = u_z_apply(f, 0.4);
  CHECK(h.weighted_norm() == doctest::Approx(f.weighted_norm()).epsilon(1e-15));
}
