#include <doctest.h>

#include <cmath>

#include "dirac_shell/expression.hpp"
#include "dirac_shell/param_maps.hpp"
#include "dirac_shell/types.hpp"

using namespace dirac_shell;

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar("1/3").is_exact());
  CHECK(parse_scalar("1/3").rational() == mpq_class(1, 3));
  CHECK(parse_scalar("-1.25").rational() == mpq_class(-5, 4));
  CHECK(parse_scalar("2e-3").rational() == mpq_class(1, 500));
  CHECK_FALSE(parse_scalar("sqrt(5)").is_exact());
  CHECK(parse_scalar("sqrt(5)").value() == doctest::Approx(std::sqrt(5.0)));
  CHECK(Scalar(mpq_class(2, 4)).rational() == mpq_class(1, 2));
  CHECK_THROWS_AS(parse_scalar("1/"), ParseError);
  CHECK_THROWS_AS(Scalar(1L) / Scalar(0L), DomainError);
}

TEST_CASE("angle parsing") {
  CHECK(Angle::parse("pi").quarter() == 2);
  CHECK(Angle::parse("-pi/2").quarter() == -1);
  CHECK(Angle::parse("3*pi/2").quarter() == 3);
  CHECK(Angle::parse("0").quarter() == 0);
  CHECK_FALSE(Angle::parse("1").quarter().has_value());
  CHECK(Angle::parse("pi").cos().rational() == -1);
  CHECK(Angle::parse("pi/2").sin().rational() == 1);
}

TEST_CASE("expressions") {
  CHECK(evaluate_constant("2*sin(pi/2)^2") == doctest::Approx(2.0));
  CHECK(evaluate_constant("-2^2") == doctest::Approx(-4.0));
  const Expression e = Expression::parse("3*sin(2*pi*t) + t/2", {"t"});
  CHECK(e(0.25) == doctest::Approx(3.125));
  CHECK_THROWS_AS(Expression::parse("sin(", {}), ParseError);
  CHECK_THROWS_AS(Expression::parse("u + 1", {"t"}), ParseError);
}

TEST_CASE("transform at pi") {
  const TransformResult t = transform(Scalar(3L), Scalar(1L), Angle::quarter_turns(2));
  CHECK(t.exact);
  CHECK(t.gamma.rational() == -4);
  CHECK(t.lambda_n_prime.rational() == -1);
  REQUIRE(t.target);
  CHECK(t.target->lambda_e.rational() == mpq_class(-3, 2));
  CHECK(t.target->lambda_n.rational() == mpq_class(1, 2));
  CHECK(t.admissible());
  const TransformResult bad = transform(Scalar(1L), Scalar(1L), Angle::quarter_turns(2));
  CHECK_FALSE(bad.admissible());
}

TEST_CASE("closed-form parameter maps") {
  const ParamPair c1 = coro1_map(Scalar(3L), Scalar(1L));
  CHECK(c1.lambda_e.rational() == mpq_class(-3, 2));
  CHECK(c1.lambda_n.rational() == mpq_class(1, 2));
  CHECK_THROWS_AS(coro1_map(Scalar(1L), Scalar(1L)), DomainError);
  CHECK_THROWS_AS(coro1_map(Scalar(2L), Scalar(0L)), DomainError);

  // d = 1 - 5 = -4.
  const Scalar le(1L), ln = Scalar::approx(std::sqrt(5.0));
  const ParamPair c2 = coro2_map(le, ln, 1);
  CHECK(c2.lambda_e.value() == doctest::Approx(2 * std::sqrt(5.0) - 4));
  CHECK(c2.lambda_n.value() == 0.0);
  CHECK_THROWS_AS(coro2_map(Scalar(3L), Scalar(1L), 1), DomainError);
  CHECK_THROWS_AS(coro2_map(Scalar(0L), Scalar(2L), 1), DomainError);

  const Coro3Result c3 = coro3_map(Scalar(3L), Scalar(1L));
  CHECK(c3.theta.theta == doctest::Approx(std::atan(1.0 / 3.0)));
  CHECK(std::abs(c3.lambda_n_prime) < 1e-12);
  CHECK(c3.value == doctest::Approx(c3.gamma / 3.0));
  CHECK_THROWS_AS(coro3_map(Scalar(3L), Scalar(0L)), DomainError);
}

TEST_CASE("region classification") {
  const RegionLabel a = classify_region(Scalar(mpq_class(1, 2)), Scalar(0L));
  CHECK(a.applicable == std::vector<std::string>{"self_adjoint", "coro1"});
  const RegionLabel b = classify_region(Scalar(2L), Scalar(0L));
  CHECK(b.on_d4);
  CHECK(b.applicable.empty());
  const RegionLabel c = classify_region(Scalar(0L), Scalar(2L));
  CHECK(c.on_dm4);
  const RegionLabel d = classify_region(Scalar(1L), Scalar::approx(std::sqrt(5.0)));
  CHECK(d.applicable == std::vector<std::string>{"self_adjoint", "coro1", "coro2"});
}

TEST_CASE("grid specs and curves") {
  const GridSpec g = GridSpec::parse("-1:1:11,-2:2:21");
  CHECK(g.le_count == 11);
  CHECK(g.ln_max == 2.0);
  CHECK_THROWS_AS(GridSpec::parse("1:-1:5,0:1:3"), DomainError);
  CHECK_THROWS_AS(GridSpec::parse("garbage"), ParseError);
  const std::string csv = region_curves_csv(region_curves(GridSpec::parse("-5:5:41,-5:5:41")));
  CHECK(csv.rfind("curve_id,lambda_e,lambda_n\n", 0) == 0);
  CHECK(csv.find("d=0,") != std::string::npos);
  CHECK(csv.find("d=-4,") != std::string::npos);
}
