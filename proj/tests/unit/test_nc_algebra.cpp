#include <doctest.h>

#include "dirac_shell/nc_algebra.hpp"
#include "dirac_shell/rng.hpp"

using namespace dirac_shell;

TEST_CASE("rewrite rules") {
  CHECK(rewrite_word("nn").first == Complex(1.0));
  CHECK(rewrite_word("nn").second.empty());
  CHECK(rewrite_word("CnC").first == Complex(-0.25));
  CHECK(rewrite_word("CnC").second == "n");
  CHECK(rewrite_word("CnCn").second.empty());
  CHECK(rewrite_word("CnCn").first == Complex(-0.25));
  CHECK(rewrite_word("CCn").second == "CCn");
  CHECK(is_normal_word("CCnCC") == false);
  CHECK(is_normal_word("CCn"));
  CHECK(is_valid_word("nCn"));
  CHECK_FALSE(is_valid_word("nxC"));
}

TEST_CASE("polynomial arithmetic") {
  const NCPoly n = NCPoly::n(), c = NCPoly::C();
  const NCPoly p = rewrite((c * n) * (c * n));
  CHECK(p.terms().size() == 1);
  CHECK(p.coefficient("") == Complex(-0.25));
  const NCPoly zero = (n + c) - (c + n);
  CHECK(zero.is_zero());
  const NCPoly s = NCPoly(Complex(2.0)) * n;
  CHECK(s.coefficient("n") == Complex(2.0));
}

TEST_CASE("catalogue identities at fixed points") {
  CHECK(check_intertwining(3, 1, 3.141592653589793).equal);
  CHECK(check_intertwining(3, 1, 0.0).deviation == 0.0);
  CHECK(check_factorization(1, 0).equal);
  CHECK(check_factorization(3, 1).equal);
  CHECK(check_magnetic_square(2).equal);
  CHECK(check_electrostatic_potential(3, 1).equal);
  CHECK(check_magnetic_potential(0.7).equal);
  CHECK(check_intertwining_rhs(1.5, -0.5, std::polar(1.0, 0.4)).equal);
  CHECK(check_intertwining_product(1.5, -0.5, std::polar(1.0, 0.4)).equal);
}

TEST_CASE("a wrong identity is detected") {
  const NCPoly lhs = NCPoly::C() * NCPoly::n() * NCPoly::C() * NCPoly::n();
  const IdentityResult r = verify_identity(lhs, NCPoly(Complex(0.25)));
  CHECK_FALSE(r.equal);
  CHECK(r.deviation == doctest::Approx(0.5));
}

TEST_CASE("catalogue runs over random samples") {
  SplitMix64 rng(7);
  for (const auto &e : identity_catalogue()) {
    INFO(e.key);
    const CatalogueRun run = run_catalogue_entry(e, 50, rng, 1e-12);
    CHECK(run.passed == 50);
    CHECK(run.max_deviation <= 1e-12);
  }
  CHECK_THROWS(catalogue_entry("no_such_identity"));
}
