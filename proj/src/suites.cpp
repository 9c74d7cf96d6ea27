#include "dirac_shell/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "dirac_shell/assembly.hpp"
#include "dirac_shell/boundary_checks.hpp"
#include "dirac_shell/dirac_algebra.hpp"
#include "dirac_shell/exact_clifford.hpp"
#include "dirac_shell/gauge.hpp"
#include "dirac_shell/layer_potential.hpp"
#include "dirac_shell/nc_algebra.hpp"
#include "dirac_shell/param_maps.hpp"
#include "dirac_shell/rng.hpp"
#include "dirac_shell/shell_ops.hpp"

namespace dirac_shell {

void CheckReport::require(bool ok, const std::string &what) {
  if (!ok) {
    passed = false;
    failures.push_back(what);
  }
}

Json CheckReport::to_json() const {
  Json j;
  j["check"] = check;
  j["surface"] = surface;
  j["level"] = level;
  j["m"] = m;
  j["params"] = params;
  j["defect"] = defect;
  j["extrapolation_table"] = extrapolation_table;
  j["passed"] = passed;
  j["failures"] = failures;
  if (!details.empty())
    j["details"] = details;
  return j;
}

bool SuiteResult::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport &r) { return r.passed; });
}

Json SuiteResult::to_json() const {
  Json j;
  j["suite"] = suite;
  j["passed"] = passed();
  Json arr = Json::array();
  for (const auto &r : reports)
    arr.push_back(r.to_json());
  j["reports"] = arr;
  return j;
}

std::vector<double> default_magnetic_lambda(const BoundarySample &sample) {
  std::vector<double> out;
  out.reserve(sample.size());
  for (const Vec3 &x : sample.nodes)
    out.push_back(2.0 + x(2));
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Json extrapolation_json(const std::vector<ExtrapolationRow> &rows) {
  Json t = Json::array();
  for (const auto &r : rows)
    t.push_back({{"radius", r.radius}, {"relative_change", r.relative_change}});
  return t;
}

Json levels_json(const std::vector<int> &levels) {
  Json j = Json::array();
  for (int l : levels)
    j.push_back(l);
  return j;
}

bool strictly_decreasing(const std::vector<double> &v) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (!(v[k] < v[k - 1]))
      return false;
  return true;
}

void require_levels(const std::vector<int> &levels, std::size_t at_least) {
  if (levels.size() < at_least)
    throw std::invalid_argument("need at least " + std::to_string(at_least) + " refinement levels");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k] < 1)
      throw std::invalid_argument("refinement levels start at 1");
    if (k && levels[k] <= levels[k - 1])
      throw std::invalid_argument("refinement levels must increase");
  }
}

} // namespace

// ---------------------------------------------------------------------------

SuiteResult algebra_suite() {
  const auto t0 = Clock::now();
  SuiteResult out{"algebra", {}, 0.0};

  CheckReport exact{"clifford_exact"};
  const auto checks = exact_clifford_checks();
  Json failed = Json::array();
  for (const auto &c : checks)
    if (!c.passed)
      failed.push_back(c.name);
  exact.defect = static_cast<double>(failed.size());
  exact.details = {{"identities", checks.size()}, {"failed", failed}};
  exact.require(failed.empty(), "exact Clifford identities");
  out.reports.push_back(exact);

  CheckReport fl{"clifford_float"};
  double worst = 0.0;
  const SpinorMatrix id = identity4(), beta = dirac_beta();
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k)
      worst = std::max(worst, max_abs_entry(anticommutator(dirac_alpha(j), dirac_alpha(k)) -
                                            (j == k ? 2.0 : 0.0) * id));
    worst = std::max(worst, max_abs_entry(anticommutator(dirac_alpha(j), beta)));
  }
  worst = std::max(worst, max_abs_entry(beta * beta - id));
  for (int j = 0; j < 3; ++j) {
    Vec3 axis = Vec3::Zero();
    for (double s : {1.0, -1.0}) {
      axis(j) = s;
      worst = std::max(worst, max_abs_entry(alpha_dot(axis) * alpha_dot(axis) - id));
    }
  }
  // {beta, alpha.N} vanishes entrywise by sign symmetry for any real N.
  SplitMix64 rng(12345);
  double anti = 0.0, square = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Vec3 n = Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)).normalized();
    anti = std::max(anti, max_abs_entry(anticommutator(beta, alpha_dot(n))));
    square = std::max(square, max_abs_entry(alpha_dot(n) * alpha_dot(n) - n.squaredNorm() * id));
  }
  worst = std::max(worst, anti);
  fl.defect = worst;
  fl.details = {{"unit_normal_square_roundoff", square}};
  fl.require(worst == 0.0, "floating Clifford identities with zero tolerance");
  fl.require(square <= 8 * std::numeric_limits<double>::epsilon(),
             "(alpha.N)^2 = |N|^2 within rounding for arbitrary unit N");
  out.reports.push_back(fl);
  out.seconds = seconds_since(t0);
  return out;
}

// ---------------------------------------------------------------------------

SuiteResult symbolic_suite(std::uint64_t seed, std::size_t samples) {
  const auto t0 = Clock::now();
  SuiteResult out{"symbolic", {}, 0.0};
  SplitMix64 root(seed);
  constexpr double tol = 1e-12;

  for (const auto &entry : identity_catalogue()) {
    SplitMix64 rng = root.split();
    const CatalogueRun run = run_catalogue_entry(entry, samples, rng, tol);
    CheckReport r{"identity:" + entry.key};
    r.params = {{"samples", samples}, {"seed", seed}};
    r.defect = run.max_deviation;
    r.details = {{"description", entry.description},
                 {"passed_samples", run.passed},
                 {"max_relative_deviation", run.max_relative_deviation}};
    r.require(run.passed == samples, "every sample verifies");
    r.require(run.max_deviation <= tol, "max coefficient deviation <= 1e-12");
    out.reports.push_back(r);
  }

  {
    CheckReport r{"intertwining_fixed_points"};
    const IdentityResult a = check_intertwining(3, 1, kPi);
    const IdentityResult b = check_intertwining(3, 1, 0.0);
    r.params = {{"lambda_e", 3}, {"lambda_n", 1}, {"theta", {"pi", 0}}};
    r.defect = std::max(a.deviation, b.deviation);
    r.require(a.equal && a.closed_over_basis, "(3,1,pi) holds over {1, n, C, Cn}");
    r.require(b.equal && b.deviation == 0.0, "theta = 0 holds exactly");
    out.reports.push_back(r);
  }
  {
    CheckReport r{"intertwining_basis_closure"};
    SplitMix64 rng = root.split();
    std::size_t closed = 0;
    for (std::size_t k = 0; k < samples; ++k) {
      double le, ln, th;
      do {
        le = rng.uniform(-5, 5);
        ln = rng.uniform(-5, 5);
        th = rng.uniform(-kPi, kPi);
      } while (std::abs(le * le - ln * ln) <= 0.1 ||
               std::abs(gauge_gamma({le, ln}, th)) <= 0.1);
      closed += check_intertwining(le, ln, th).closed_over_basis ? 1 : 0;
    }
    r.params = {{"samples", samples}};
    r.defect = static_cast<double>(samples - closed);
    r.require(closed == samples, "both sides reduce to words in {1, n, C, Cn}");
    out.reports.push_back(r);
  }
  {
    CheckReport r{"rewrite_examples"};
    const NCPoly a = rewrite(NCPoly::word("CnCn"));
    const NCPoly b = rewrite(NCPoly::word("nn"));
    const NCPoly c = rewrite(NCPoly::word("CnC"));
    r.require(a.terms().size() == 1 && a.coefficient("") == Complex(-0.25), "CnCn -> -1/4");
    r.require(b.terms().size() == 1 && b.coefficient("") == Complex(1.0), "nn -> 1");
    r.require(c.terms().size() == 1 && c.coefficient("n") == Complex(-0.25), "CnC -> -n/4");
    const IdentityResult f1 = check_factorization(1, 0), f2 = check_factorization(3, 1);
    const IdentityResult m2 = check_magnetic_square(2), m1 = check_magnetic_square(1);
    r.require(f1.equal && f1.deviation == 0.0, "factorization at (1,0) exact");
    r.require(f2.equal, "factorization at (3,1)");
    r.require(m2.equal && m1.equal, "magnetic square at lambda = 2 and 1");
    r.defect = std::max({f1.deviation, f2.deviation, m1.deviation, m2.deviation});
    out.reports.push_back(r);
  }
  {
    CheckReport r{"rewrite_confluence"};
    SplitMix64 rng = root.split();
    std::size_t mismatches = 0;
    const std::size_t words = 1000;
    for (std::size_t k = 0; k < words; ++k) {
      const std::size_t len = rng.below(13);
      Word w;
      for (std::size_t i = 0; i < len; ++i)
        w.push_back(rng.below(2) ? 'n' : 'C');
      const auto l = rewrite_word(w, RewriteOrder::Leftmost);
      const auto rr = rewrite_word(w, RewriteOrder::Rightmost);
      if (l != rr || !is_normal_word(l.second) || l.second.size() > w.size())
        ++mismatches;
    }
    r.params = {{"words", words}, {"max_length", 12}};
    r.defect = static_cast<double>(mismatches);
    r.require(mismatches == 0, "leftmost and rightmost rewriting agree");
    out.reports.push_back(r);
  }
  out.seconds = seconds_since(t0);
  return out;
}

// ---------------------------------------------------------------------------

SuiteResult param_suite(std::uint64_t seed, std::size_t samples) {
  const auto t0 = Clock::now();
  SuiteResult out{"param_maps", {}, 0.0};
  SplitMix64 root(seed);
  constexpr double tol = 1e-12;

  {
    CheckReport r{"coro1_involution"};
    std::size_t checked = 0, failures = 0, transform_mismatch = 0;
    for (int a = -20; a <= 20; ++a)
      for (int b = -20; b <= 20; ++b) {
        const Scalar le(mpq_class(a, 4)), ln(mpq_class(b, 4));
        const Scalar d = le * le - ln * ln;
        if (d.is_zero(0) || (d - Scalar(4L)).is_zero(0))
          continue;
        ++checked;
        const ParamPair once = coro1_map(le, ln);
        const ParamPair twice = coro1_map(once.lambda_e, once.lambda_n);
        if (!(twice.lambda_e.rational() == le.rational() &&
              twice.lambda_n.rational() == ln.rational()))
          ++failures;
        const TransformResult t = transform(le, ln, Angle::quarter_turns(2));
        if (!t.target || !t.exact || t.target->lambda_e.rational() != once.lambda_e.rational() ||
            t.target->lambda_n.rational() != once.lambda_n.rational())
          ++transform_mismatch;
      }
    r.params = {{"grid", "41x41 over [-5,5]^2, step 1/4"}};
    r.defect = static_cast<double>(failures + transform_mismatch);
    r.details = {{"points_checked", checked}, {"transform_pi_mismatches", transform_mismatch}};
    r.require(failures == 0, "coro1 o coro1 = id exactly");
    r.require(transform_mismatch == 0, "transform at pi equals coro1 exactly");
    out.reports.push_back(r);
  }
  {
    CheckReport r{"coro3_consistency"};
    SplitMix64 rng = root.split();
    double worst_lnp = 0.0, worst_target = 0.0;
    std::size_t fallbacks = 0;
    for (std::size_t k = 0; k < samples; ++k) {
      double le, ln;
      for (;;) {
        le = rng.uniform(-5, 5);
        ln = rng.uniform(-5, 5);
        const double d = le * le - ln * ln;
        if (std::abs(le) > 0.1 && std::abs(ln) > 0.1 && std::abs(d) > 0.1 &&
            std::abs(std::abs(d) - 4) > 0.1 && std::abs(d + 2 * le - 4) > 0.1 &&
            std::abs(d - 2 * le - 4) > 0.1)
          break;
      }
      const Coro3Result c = coro3_map(Scalar::approx(le), Scalar::approx(ln));
      fallbacks += c.theta.used_fallback ? 1 : 0;
      worst_lnp = std::max(worst_lnp, std::abs(c.lambda_n_prime));
      const TransformResult t =
          transform(Scalar::approx(le), Scalar::approx(ln), Angle::radians(c.theta.theta));
      const double gl = c.gamma / le;
      const double scale = std::max(1.0, std::abs(c.value));
      worst_target = std::max({worst_target, std::abs(gl - c.value) / scale,
                               std::abs(t.target->lambda_e.value() - c.value) / scale});
    }
    r.params = {{"samples", samples}, {"seed", seed}};
    r.defect = std::max(worst_lnp, worst_target);
    r.details = {{"max_abs_lambda_n_prime", worst_lnp},
                 {"max_relative_target_gap", worst_target},
                 {"fallback_branches", fallbacks}};
    r.require(worst_lnp <= tol, "lambda_n' = 0 within 1e-12");
    r.require(worst_target <= tol, "coro3 value = gamma/lambda_e = transform target within 1e-12");
    out.reports.push_back(r);
  }
  {
    CheckReport r{"coro2_matches_transform"};
    SplitMix64 rng = root.split();
    double worst = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
      double le;
      do
        le = rng.uniform(-5, 5);
      while (std::abs(le) <= 0.1);
      const double ln = (rng.below(2) ? 1.0 : -1.0) * std::sqrt(le * le + 4.0);
      for (int sign : {1, -1}) {
        const ParamPair c = coro2_map(Scalar::approx(le), Scalar::approx(ln), sign);
        const TransformResult t =
            transform(Scalar::approx(le), Scalar::approx(ln), Angle::quarter_turns(sign));
        const double scale = std::max(1.0, std::abs(c.lambda_e.value()));
        worst = std::max({worst, std::abs(t.target->lambda_e.value() - c.lambda_e.value()) / scale,
                          std::abs(t.target->lambda_n.value()) / scale});
      }
    }
    r.params = {{"samples", samples}};
    r.defect = worst;
    r.require(worst <= tol, "transform at +-pi/2 equals coro2 within 1e-12");
    out.reports.push_back(r);
  }
  {
    CheckReport r{"classify_grid"};
    std::size_t mismatches = 0, points = 0;
    for (int a = -50; a <= 50; ++a)
      for (int b = -50; b <= 50; ++b) {
        ++points;
        const RegionLabel lab = classify_region(Scalar(mpq_class(a, 10)), Scalar(mpq_class(b, 10)));
        // Direct floating evaluation of the defining inequalities.
        const double le = a / 10.0, ln = b / 10.0, d = le * le - ln * ln;
        auto zero = [](double x) { return std::abs(x) <= 1e-9; };
        const bool d0 = zero(d), d4 = zero(d - 4), dm4 = zero(d + 4);
        const bool rp = zero(d + 2 * le - 4), rm = zero(d - 2 * le - 4);
        std::vector<std::string> expect;
        if (!d0 && !d4) {
          expect.push_back("self_adjoint");
          expect.push_back("coro1");
        }
        if (le != 0 && dm4)
          expect.push_back("coro2");
        if (le != 0 && ln != 0 && !d0 && !d4 && !dm4 && !rp && !rm)
          expect.push_back("coro3");
        if (lab.on_d0 != d0 || lab.on_d4 != d4 || lab.on_dm4 != dm4 || lab.on_red_plus != rp ||
            lab.on_red_minus != rm || lab.applicable != expect)
          ++mismatches;
      }
    r.params = {{"grid", "101x101 over [-5,5]^2"}};
    r.defect = static_cast<double>(mismatches);
    r.details = {{"points", points}};
    r.require(mismatches == 0, "classification matches direct evaluation");
    out.reports.push_back(r);
  }
  {
    CheckReport r{"transform_examples"};
    const TransformResult t = transform(Scalar(3L), Scalar(1L), Angle::quarter_turns(2));
    r.params = {{"lambda_e", 3}, {"lambda_n", 1}, {"theta", "pi"}};
    r.details = {{"gamma", t.gamma.to_string()},
                 {"lambda_n_prime", t.lambda_n_prime.to_string()},
                 {"target", {t.target->lambda_e.to_string(), t.target->lambda_n.to_string()}},
                 {"admissible", t.admissible()}};
    r.require(t.exact && t.gamma.rational() == -4 && t.lambda_n_prime.rational() == -1,
              "gamma = -4 and lambda_n' = -1 exactly");
    r.require(t.target->lambda_e.rational() == mpq_class(-3, 2) &&
                  t.target->lambda_n.rational() == mpq_class(1, 2),
              "target (-3/2, 1/2)");
    r.require(t.admissible(), "all predicates pass");
    const Coro3Result c = coro3_map(Scalar(3L), Scalar(1L));
    r.details["coro3_theta"] = c.theta.theta;
    r.details["coro3_value"] = c.value;
    r.require(std::abs(c.theta.theta - std::atan(1.0 / 3.0)) <= 1e-15, "coro3 theta = atan(1/3)");
    out.reports.push_back(r);
  }
  out.seconds = seconds_since(t0);
  return out;
}

// ---------------------------------------------------------------------------

SuiteResult numeric_suite(const NumericConfig &cfg) {
  const auto t0 = Clock::now();
  require_levels(cfg.levels, 3);
  SuiteResult out{"numeric", {}, 0.0};
  const MassParameter m(cfg.m);
  const CouplingParams p{cfg.lambda_e, cfg.lambda_n};
  const int band_degree =
      cfg.band_degree >= 0 ? cfg.band_degree : sphere_colatitudes(cfg.levels.front()) - 5;

  std::vector<double> calderon, intertwine, factorization, factorization10, hermitian, gap;
  for (int level : cfg.levels) {
    auto sample = std::make_shared<const BoundarySample>(sphere_sample(level));
    const AssemblyResult asm_ = assemble_C_detailed(sample, m);
    const BoundaryOperator &c = asm_.op;
    const ResolvedBand band = resolved_band(*sample, band_degree);
    const Json table = extrapolation_json(asm_.extrapolation_table);
    const std::string surface = sample->descriptor.name();
    auto base = [&](const std::string &name) {
      CheckReport r{name, surface, level, cfg.m};
      r.extrapolation_table = table;
      return r;
    };

    CheckReport cal = base("calderon");
    cal.defect = calderon_defect(c, band);
    cal.params = {{"band_degree", band.degree}, {"band_dimension", band.dimension()},
                  {"nodes", sample->size()}};
    if (cfg.full_space)
      cal.details["full_space_defect"] = calderon_defect_full(c);
    calderon.push_back(cal.defect);
    out.reports.push_back(cal);

    CheckReport herm = base("hermitian_defect");
    herm.defect = hermitian_defect(c, band);
    hermitian.push_back(herm.defect);
    herm.require(herm.defect <= 1e-12, "symmetrized C Hermitian to rounding");
    const double herm_lambda = hermitian_defect(lambda_electrostatic(p, c), band);
    herm.details["lambda_electrostatic"] = herm_lambda;
    herm.require(herm_lambda <= 1e-12, "symmetrized Lambda Hermitian to rounding");
    out.reports.push_back(herm);

    CheckReport it = base("intertwine");
    it.params = {{"lambda_e", p.lambda_e}, {"lambda_n", p.lambda_n}, {"theta", cfg.theta}};
    it.defect = intertwine_defect(p, cfg.theta, c, band);
    const double it0 = intertwine_defect(p, 0.0, c, band);
    it.details = {{"theta_zero_defect", it0}, {"ratio_to_calderon", it.defect / cal.defect}};
    it.require(it0 == 0.0, "theta = 0 gives zero defect exactly");
    it.require(it.defect <= 10.0 * cal.defect, "<= 10 x Calderon defect");
    intertwine.push_back(it.defect);
    out.reports.push_back(it);

    CheckReport fa = base("factorization");
    fa.params = {{"lambda_e", p.lambda_e}, {"lambda_n", p.lambda_n}};
    fa.defect = factorization_defect(p, c, band);
    const double fa10 = factorization_defect({1.0, 0.0}, c, band);
    fa.details = {{"defect_at_1_0", fa10}, {"ratio_to_calderon", fa.defect / cal.defect}};
    fa.require(fa.defect <= 10.0 * cal.defect, "<= 10 x Calderon defect");
    fa.require(fa10 <= 10.0 * cal.defect, "(1,0) <= 10 x Calderon defect");
    factorization.push_back(fa.defect);
    factorization10.push_back(fa10);
    out.reports.push_back(fa);

    CheckReport ex = base("exact_matrix_identities");
    const double pot = electrostatic_potential_residual(p, c);
    const SurfaceScalarField lam =
        SurfaceScalarField{default_magnetic_lambda(*sample), "2 + x3"};
    const double mpot = magnetic_potential_residual(lam, c);
    const double plus = plus_relation_residual(p, c);
    const double z0 =
        (lambda_z(p, 0.0, c).matrix() - lambda_electrostatic(p, c).matrix()).cwiseAbs().maxCoeff();
    ex.params = {{"lambda_e", p.lambda_e}, {"lambda_n", p.lambda_n}};
    ex.defect = std::max({pot, mpot, plus, z0});
    ex.details = {{"electrostatic_potential", pot},
                  {"magnetic_potential", mpot},
                  {"lambda_plus_relation", plus},
                  {"lambda_z_at_zero", z0}};
    ex.require(plus == 0.0, "Lambda = -Lambda_+ exactly");
    ex.require(z0 == 0.0, "Lambda_z at theta = 0 equals Lambda exactly");
    ex.require(pot <= 4 * std::numeric_limits<double>::epsilon(),
               "(le + ln alpha.N)(Lambda + C) = -1 to rounding of alpha.N");
    ex.require(mpot <= 4 * std::numeric_limits<double>::epsilon(),
               "lambda alpha.N (Lambda_lambda + C) = -1 to rounding of alpha.N");
    out.reports.push_back(ex);

    CheckReport fg = base("fredholm_gap");
    fg.params = {{"lambda_e", 1.0}, {"lambda_n", 0.0}};
    fg.defect = fredholm_gap(lambda_electrostatic({1.0, 0.0}, c), band);
    fg.details = {{"note", "smallest singular value on the band; invertibility proxy only"}};
    gap.push_back(fg.defect);
    out.reports.push_back(fg);

    if (level == cfg.levels.front()) {
      CheckReport st = base("calderon_identity_standin");
      st.defect = calderon_defect(BoundaryOperator::identity(sample), band);
      st.require(std::abs(st.defect - 1.25) <= 1e-12, "identity stand-in gives 5/4");
      out.reports.push_back(st);
    }
  }

  CheckReport ref{"calderon_refinement", "sphere", cfg.levels.back(), cfg.m};
  ref.params = {{"levels", levels_json(cfg.levels)}, {"band_degree", band_degree}};
  ref.defect = calderon.back();
  ref.details = {{"calderon", calderon},
                 {"intertwine", intertwine},
                 {"factorization", factorization},
                 {"factorization_1_0", factorization10},
                 {"hermitian", hermitian},
                 {"fredholm_gap", gap}};
  ref.require(strictly_decreasing(calderon), "Calderon defect strictly decreases");
  ref.require(calderon.back() <= 5e-2, "finest Calderon defect <= 5e-2");
  ref.require(strictly_decreasing(intertwine), "intertwine defect decreases");
  ref.require(strictly_decreasing(factorization), "factorization defect decreases");
  const double g1 = gap[gap.size() - 2], g2 = gap.back();
  ref.require(std::abs(g2 - g1) <= 0.2 * std::abs(g1), "Fredholm gap stable within 20%");
  out.reports.push_back(ref);
  out.seconds = seconds_since(t0);
  return out;
}

// ---------------------------------------------------------------------------

SuiteResult jump_suite(double m_value, const std::vector<int> &levels) {
  const auto t0 = Clock::now();
  require_levels(levels, 2);
  SuiteResult out{"jump", {}, 0.0};
  const MassParameter m(m_value);
  struct Named {
    const char *name;
    std::function<SpinorVector(const Vec3 &)> f;
  };
  const std::vector<Named> densities{
      {"constant_e1", [](const Vec3 &) { return SpinorVector(1, 0, 0, 0); }},
      {"linear", [](const Vec3 &x) {
         return SpinorVector(Complex(1 + x(2), 0.3), x(0), Complex(0, x(1)), 0.5);
       }},
      {"quadratic", [](const Vec3 &x) {
         return SpinorVector(x(0) * x(1), Complex(x(2) * x(2), -x(0)), 1.0 - x(1),
                             Complex(0.5 * x(0) * x(2), x(1) * x(1)));
       }},
  };

  std::vector<double> worst_jump, worst_avg;
  for (int level : levels) {
    auto sample = std::make_shared<const BoundarySample>(sphere_sample(level));
    const AssemblyResult asm_ = assemble_C_detailed(sample, m);
    const double h = sample->node_spacing();
    const std::vector<double> deltas{h / 2, h / 4, h / 8, h / 16};
    const std::vector<std::size_t> nodes{0, sample->size() / 3, (2 * sample->size()) / 3};
    double wj = 0.0, wa = 0.0, wp = 0.0, wm = 0.0;
    Json per = Json::array();
    for (const auto &dn : densities) {
      const Density g = Density::from_function(*sample, dn.f);
      double dj = 0.0, da = 0.0;
      for (std::size_t node : nodes) {
        const JumpReport jr = jump_check(asm_.op, g, node, deltas, m);
        dj = std::max(dj, jr.jump_defect);
        da = std::max(da, jr.average_defect);
        wp = std::max(wp, jr.plus_defect);
        wm = std::max(wm, jr.minus_defect);
      }
      per.push_back({{"density", dn.name}, {"jump_defect", dj}, {"average_defect", da}});
      wj = std::max(wj, dj);
      wa = std::max(wa, da);
    }
    const JumpReport zero = jump_check(asm_.op, Density(sample->size()), 0, deltas, m);
    CheckReport r{"jump", sample->descriptor.name(), level, m_value};
    r.extrapolation_table = extrapolation_json(asm_.extrapolation_table);
    r.params = {{"deltas", deltas}, {"nodes", nodes}};
    r.defect = wj;
    r.details = {{"average_defect", wa},     {"plus_defect", wp},
                 {"minus_defect", wm},       {"densities", per},
                 {"zero_density_defect", zero.jump_defect + zero.average_defect}};
    r.require(zero.jump_defect == 0.0 && zero.average_defect == 0.0, "g = 0 gives zero defect");
    worst_jump.push_back(wj);
    worst_avg.push_back(wa);
    out.reports.push_back(r);
  }
  CheckReport ref{"jump_refinement", "sphere", levels.back(), m_value};
  ref.params = {{"levels", levels_json(levels)}};
  ref.defect = worst_jump.back();
  ref.details = {{"jump", worst_jump}, {"average", worst_avg}};
  ref.require(strictly_decreasing(worst_jump), "jump defect decreases under refinement");
  ref.require(strictly_decreasing(worst_avg), "average defect decreases under refinement");
  ref.require(worst_jump.back() <= 5e-2, "finest jump defect <= 5e-2");
  ref.require(worst_avg.back() <= 5e-2, "finest average defect <= 5e-2");
  out.reports.push_back(ref);
  out.seconds = seconds_since(t0);
  return out;
}

// ---------------------------------------------------------------------------

SuiteResult magnetic_suite(const MagneticConfig &cfg) {
  const auto t0 = Clock::now();
  require_levels(cfg.levels, 3);
  SuiteResult out{"magnetic", {}, 0.0};
  const MassParameter m(cfg.m);
  std::vector<double> sups;
  std::vector<CompactnessProxy> normal_proxy, lambda_proxy;
  for (int level : cfg.levels) {
    auto sample = std::make_shared<const BoundarySample>(sphere_sample(level));
    const std::vector<double> lambda = default_magnetic_lambda(*sample);
    const MagneticSupResult sup = magnetic_sup(*sample, lambda, m);
    const AssemblyResult asm_ = assemble_C_detailed(sample, m);
    const ResolvedBand band = resolved_band(*sample);
    normal_proxy.push_back(compactness_proxy(
        *sample, band, anticommutator_action(asm_.op, BoundaryOperator::normal_multiplier(sample)),
        cfg.tau_ratio));
    lambda_proxy.push_back(compactness_proxy(
        *sample, band, anticommutator_action(asm_.op, inverse_lambda_normal(sample, lambda)),
        cfg.tau_ratio));
    sups.push_back(sup.sup);

    CheckReport r{"magnetic_kernel", sample->descriptor.name(), level, cfg.m};
    r.extrapolation_table = extrapolation_json(asm_.extrapolation_table);
    r.params = {{"lambda", "2 + x3"}, {"tau_ratio", cfg.tau_ratio}};
    r.defect = sup.sup;
    auto proxy_json = [](const CompactnessProxy &p) {
      return Json{{"s1", p.singular_values.size() ? p.singular_values(0) : 0.0},
                  {"count_above", p.count_above},
                  {"dimension", p.dimension}};
    };
    r.details = {{"sup_r_norm_K", sup.sup},
                 {"argmax", {sup.argmax_x, sup.argmax_z}},
                 {"anticommutator_C_normal", proxy_json(normal_proxy.back())},
                 {"anticommutator_inv_lambda_normal_C", proxy_json(lambda_proxy.back())}};
    out.reports.push_back(r);
  }
  CheckReport ref{"magnetic_refinement", "sphere", cfg.levels.back(), cfg.m};
  ref.params = {{"levels", levels_json(cfg.levels)}, {"slack", cfg.slack}};
  bool sup_stable = true;
  for (std::size_t k = 1; k < sups.size(); ++k)
    sup_stable = sup_stable && std::abs(sups[k] - sups[k - 1]) <= cfg.sup_tolerance * sups[k - 1];
  ref.defect = sups.back();
  ref.details = {{"sup", sups}};
  ref.require(sup_stable, "sup |x-z| ||K|| stable within 20%");
  ref.require(compactness_stable(normal_proxy, cfg.slack), "{C, alpha.N} count stable");
  ref.require(compactness_stable(lambda_proxy, cfg.slack), "{(1/lambda) alpha.N, C} count stable");
  out.reports.push_back(ref);
  out.seconds = seconds_since(t0);
  return out;
}

// ---------------------------------------------------------------------------

SuiteResult gauge_suite(std::uint64_t seed, std::size_t rhs_samples, std::size_t coeff_samples) {
  const auto t0 = Clock::now();
  SuiteResult out{"gauge", {}, 0.0};
  SplitMix64 root(seed);
  auto draw = [](SplitMix64 &rng) {
    for (;;) {
      const double M = rng.uniform(0.0, 10.0);
      const double l = rng.uniform(-10.0, 10.0);
      if (M > 0.0 && l + M > 0.0)
        return std::pair{l, M};
    }
  };
  {
    CheckReport r{"gauge_rhs"};
    SplitMix64 rng = root.split();
    double modulus = 0.0, min_dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < rhs_samples; ++k) {
      const auto [l, M] = draw(rng);
      const Complex z = gauge_rhs(l, M);
      modulus = std::max(modulus, std::abs(std::abs(z) - 1.0));
      min_dist = std::min(min_dist, std::abs(z - 1.0));
    }
    r.params = {{"samples", rhs_samples}, {"seed", seed}};
    r.defect = modulus;
    r.details = {{"min_distance_from_1", min_dist}, {"rhs_at_0_2", {gauge_rhs(0, 2).real(), gauge_rhs(0, 2).imag()}}};
    r.require(modulus <= 1e-14, "| |rhs| - 1 | <= 1e-14");
    r.require(min_dist > 0.0, "rhs never equals 1");
    r.require(std::abs(gauge_rhs(0, 2) - Complex(0, 1)) <= 1e-15, "rhs(0, 2) = i");
    out.reports.push_back(r);
  }
  {
    CheckReport r{"boundary_coefficient"};
    SplitMix64 rng = root.split();
    double worst = 0.0, jump_mod = 0.0;
    for (std::size_t k = 0; k < coeff_samples; ++k) {
      const auto [l, M] = draw(rng);
      worst = std::max(worst, std::abs(boundary_coeff_check(l, M)));
      jump_mod = std::max(jump_mod, std::abs(std::abs(jump_coefficient(l, M)) - 1.0));
    }
    r.params = {{"samples", coeff_samples}, {"seed", seed}};
    r.defect = worst;
    r.details = {{"jump_coefficient_modulus_gap", jump_mod},
                 {"residual_at_0_2", std::abs(boundary_coeff_check(0, 2))}};
    r.require(worst <= 1e-12, "max residual <= 1e-12");
    r.require(jump_mod <= 1e-14, "|jump coefficient| = 1 within 1e-14");
    r.require(std::abs(boundary_coeff_check(0, 2)) <= 1e-14, "residual at (0, 2) vanishes");
    out.reports.push_back(r);
  }
  {
    CheckReport r{"theta_unwrapping"};
    const double M = 4.0;
    auto lambda_of = [](double t) { return 3.0 * std::sin(2.0 * kPi * t) + 0.5 * t; };
    std::vector<double> second, recon, steps;
    for (int n : {100, 200, 400, 800}) {
      std::vector<double> lam(n + 1);
      for (int k = 0; k <= n; ++k)
        lam[k] = lambda_of(static_cast<double>(k) / n);
      const GaugeAngle g = theta_from_lambda(lam, M);
      second.push_back(g.max_second_difference());
      recon.push_back(g.reconstruction_error());
      steps.push_back(g.max_step);
    }
    r.params = {{"M", M}, {"lambda", "3 sin(2 pi t) + t/2"}, {"samples", {100, 200, 400, 800}}};
    r.defect = *std::max_element(recon.begin(), recon.end());
    r.details = {{"max_second_difference", second}, {"max_step", steps}, {"reconstruction", recon}};
    r.require(r.defect <= 1e-12, "e^{i theta} reproduces rhs within 1e-12");
    r.require(std::all_of(steps.begin(), steps.end(), [](double s) { return s < kPi; }),
              "adjacent jumps below pi");
    r.require(strictly_decreasing(second), "second differences shrink under path refinement");
    out.reports.push_back(r);
  }
  {
    CheckReport r{"u_z_group"};
    const BoundarySample s = sphere_sample(1);
    const PiecewiseField f = PiecewiseField::straddle(s, 0.05, [](const Vec3 &x) {
      return SpinorVector(x(0), Complex(x(1), 1.0), x(2) * x(2), Complex(0.0, x(0)));
    });
    const PiecewiseField back = u_z_apply(u_z_apply(f, 0.7), -0.7);
    const PiecewiseField ident = u_z_apply(f, 0.0);
    bool exact_back = true, exact_ident = true, inside_fixed = true;
    const PiecewiseField g = u_z_apply(f, 1.3);
    for (std::size_t k = 0; k < f.size(); ++k) {
      exact_back = exact_back && back.value(k) == f.value(k);
      exact_ident = exact_ident && ident.value(k) == f.value(k);
      if (f.tag(k) == Region::Inside)
        inside_fixed = inside_fixed && g.value(k) == f.value(k);
    }
    const double norm_gap = std::abs(g.weighted_norm() - f.weighted_norm()) / f.weighted_norm();
    const Density eta = gauge_eta_gradient(0.0, s, SpinorVector(1, 0, 0, 0));
    const Vec3 curl = eta_curl_proxy(1.5, s, Vec3(0.3, -0.2, 0.9));
    r.defect = norm_gap;
    r.details = {{"norm_relative_gap", norm_gap}, {"curl_proxy", curl.norm()}};
    r.require(exact_back && exact_ident, "U_z U_conj(z) = 1 and U_1 = 1 exactly");
    r.require(inside_fixed, "inside values unchanged");
    r.require(norm_gap <= 4 * std::numeric_limits<double>::epsilon(), "weighted norm preserved");
    r.require(eta.flat().isZero(0.0), "lambda_n = 0 gives zero gradient density");
    r.require(curl.norm() <= 1e-13, "discrete curl proxy vanishes");
    out.reports.push_back(r);
  }
  out.seconds = seconds_since(t0);
  return out;
}

} // namespace dirac_shell
