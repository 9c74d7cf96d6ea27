#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirac_shell/expression.hpp"
#include "dirac_shell/gauge.hpp"
#include "dirac_shell/nc_algebra.hpp"
#include "dirac_shell/param_maps.hpp"
#include "dirac_shell/report_json.hpp"
#include "dirac_shell/rng.hpp"
#include "dirac_shell/suites.hpp"

using namespace dirac_shell;

namespace {

struct Options {
  std::string output;
  std::uint64_t seed = 20240601;
  double m = 1.0;
  std::string levels;
  std::string le = "3", ln = "1", theta = "pi";
  int sign = 1;
  std::string rail = "symbolic";
  std::size_t samples = 100;
  double lambda = 2.0;
  std::string grid = "-5:5:101,-5:5:101";
  std::string lambda_expr, lambda_csv;
  double M = 4.0;
  std::size_t path_samples = 400;
  int band_degree = -1;
  bool full_space = false;
};

struct Outcome {
  Json result;
  bool passed = true;
  std::string text; ///< raw text output (CSV) instead of JSON when non-empty
};

std::vector<int> parse_levels(const std::string &text, std::vector<int> fallback) {
  if (text.empty())
    return fallback;
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw ParseError("invalid level '" + item + "'");
    }
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

Outcome suite_outcome(const SuiteResult &s, const std::vector<std::string> &only = {}) {
  SuiteResult filtered = s;
  if (!only.empty()) {
    filtered.reports.clear();
    for (const auto &r : s.reports)
      if (std::find(only.begin(), only.end(), r.check) != only.end())
        filtered.reports.push_back(r);
  }
  std::cerr << s.suite << ": " << (filtered.passed() ? "pass" : "FAIL") << " in " << s.seconds
            << " s\n";
  return {filtered.to_json(), filtered.passed(), {}};
}

Outcome identity_outcome(const IdentityResult &fixed, const std::string &key,
                         const Options &o) {
  SplitMix64 rng(o.seed);
  const CatalogueRun run = run_catalogue_entry(catalogue_entry(key), o.samples, rng, 1e-12);
  Json j;
  j["fixed"] = identity_json(fixed);
  j["random"] = {{"key", key},
                 {"samples", o.samples},
                 {"passed", run.passed},
                 {"max_deviation", run.max_deviation},
                 {"max_relative_deviation", run.max_relative_deviation}};
  const bool ok = fixed.equal && run.passed == o.samples && run.max_deviation <= 1e-12;
  return {j, ok, {}};
}

NumericConfig numeric_config(const Options &o) {
  NumericConfig c;
  c.m = o.m;
  c.levels = parse_levels(o.levels, c.levels);
  c.band_degree = o.band_degree;
  c.lambda_e = parse_scalar(o.le).value();
  c.lambda_n = parse_scalar(o.ln).value();
  c.theta = Angle::parse(o.theta).value();
  c.full_space = o.full_space;
  return c;
}

MagneticConfig magnetic_config(const Options &o) {
  MagneticConfig c;
  c.m = o.m;
  c.levels = parse_levels(o.levels, c.levels);
  return c;
}

std::vector<double> read_lambda_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open " + path);
  std::vector<double> out;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    const auto comma = line.find_last_of(',');
    const std::string cell = comma == std::string::npos ? line : line.substr(comma + 1);
    if (cell.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
    } catch (const std::exception &) {
      if (row == 1)
        continue; // header
      throw ParseError("row " + std::to_string(row) + ": not a number");
    }
  }
  if (out.size() < 2)
    throw DomainError("lambda path needs at least two samples");
  return out;
}

Json config_json(const std::string &command, const Options &o) {
  return {{"command", command}, {"seed", o.seed},   {"m", o.m},
          {"levels", o.levels}, {"le", o.le},       {"ln", o.ln},
          {"theta", o.theta},   {"sign", o.sign},   {"rail", o.rail},
          {"samples", o.samples}, {"lambda", o.lambda}, {"grid", o.grid},
          {"lambda_expr", o.lambda_expr}, {"lambda_csv", o.lambda_csv}, {"M", o.M},
          {"path_samples", o.path_samples}, {"band_degree", o.band_degree},
          {"full_space", o.full_space}};
}

int emit(const std::string &command, const Options &o, const Outcome &out) {
  std::string payload;
  if (!out.text.empty()) {
    payload = out.text;
  } else {
    Json j;
    j["tool"] = "dirac_shell";
    j["config"] = config_json(command, o);
    j["timestamp"] = utc_timestamp();
    j["passed"] = out.passed;
    j["result"] = out.result;
    payload = j.dump(2) + "\n";
  }
  if (o.output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(o.output);
    if (!f)
      throw std::invalid_argument("cannot write " + o.output);
    f << payload;
  }
  return out.passed ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Dirac shell interaction checks"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, std::function<Outcome()>> handlers;

  auto add = [&](const std::string &name, const std::string &help, std::function<Outcome()> fn) {
    CLI::App *sub = app.add_subcommand(name, help);
    sub->add_option("-o,--output", o.output, "write the report to a file");
    handlers[name] = std::move(fn);
    return sub;
  };
  auto with_levels = [&](CLI::App *s) {
    s->add_option("--m", o.m, "mass parameter")->check(CLI::PositiveNumber);
    s->add_option("--levels", o.levels, "comma-separated refinement levels");
  };
  auto with_coupling = [&](CLI::App *s) {
    s->add_option("--le", o.le, "electrostatic coupling (exact rational or expression)");
    s->add_option("--ln", o.ln, "Lorentz scalar coupling");
  };
  auto with_seed = [&](CLI::App *s) {
    s->add_option("--seed", o.seed, "RNG seed");
    s->add_option("--samples", o.samples, "random samples")->check(CLI::PositiveNumber);
  };

  add("algebra-check", "Clifford identities exactly and in floating point",
      [&] { return suite_outcome(algebra_suite()); });

  auto *cal = add("calderon", "(C)^2 = -1/4 defect under refinement", [&] {
    return suite_outcome(numeric_suite(numeric_config(o)),
                         {"calderon", "hermitian_defect", "calderon_identity_standin",
                          "calderon_refinement"});
  });
  with_levels(cal);
  cal->add_option("--band-degree", o.band_degree, "fixed spherical-harmonic band degree");
  cal->add_flag("--full-space", o.full_space, "also report the unrestricted defect");

  auto *jump = add("jump", "single-layer jump relations", [&] {
    return suite_outcome(jump_suite(o.m, parse_levels(o.levels, {1, 2, 3})));
  });
  with_levels(jump);

  auto *it = add("intertwine", "Lambda_z intertwining identity", [&] {
    if (o.rail == "numeric")
      return suite_outcome(numeric_suite(numeric_config(o)), {"intertwine", "calderon_refinement"});
    const IdentityResult r = check_intertwining(parse_scalar(o.le).value(), parse_scalar(o.ln).value(),
                                                Angle::parse(o.theta).value());
    return identity_outcome(r, "intertwining", o);
  });
  with_coupling(it);
  with_levels(it);
  with_seed(it);
  it->add_option("--theta", o.theta, "gauge angle");
  it->add_option("--rail", o.rail, "symbolic or numeric")
      ->check(CLI::IsMember({"symbolic", "numeric"}));

  auto *fa = add("factorization", "Lambda factorization identity", [&] {
    if (o.rail == "numeric")
      return suite_outcome(numeric_suite(numeric_config(o)),
                           {"factorization", "exact_matrix_identities", "fredholm_gap"});
    const IdentityResult r =
        check_factorization(parse_scalar(o.le).value(), parse_scalar(o.ln).value());
    return identity_outcome(r, "factorization", o);
  });
  with_coupling(fa);
  with_levels(fa);
  with_seed(fa);
  fa->add_option("--rail", o.rail, "symbolic or numeric")
      ->check(CLI::IsMember({"symbolic", "numeric"}));

  auto *mk = add("magnetic-kernel", "magnetic kernel bound and compactness proxies",
                 [&] { return suite_outcome(magnetic_suite(magnetic_config(o))); });
  with_levels(mk);

  auto *ms = add("magnetic-square", "magnetic square identity", [&] {
    if (o.lambda == 0.0)
      throw DomainError("lambda must be nonzero");
    return identity_outcome(check_magnetic_square(o.lambda), "magnetic_square", o);
  });
  ms->add_option("--lambda", o.lambda, "magnetic coupling value");
  with_seed(ms);

  auto *map = add("map", "gauge transform of the coupling pair", [&] {
    const TransformResult t = transform(parse_scalar(o.le), parse_scalar(o.ln), Angle::parse(o.theta));
    return Outcome{transform_json(t), true, {}};
  });
  with_coupling(map);
  map->add_option("--theta", o.theta, "gauge angle (exact for multiples of pi/2)");

  auto *c1 = add("coro1", "(le, ln) -> (-4 le/d, 4 ln/d)", [&] {
    return Outcome{pair_json(coro1_map(parse_scalar(o.le), parse_scalar(o.ln))), true, {}};
  });
  with_coupling(c1);
  auto *c2 = add("coro2", "map on d = -4 to a purely electrostatic coupling", [&] {
    return Outcome{pair_json(coro2_map(parse_scalar(o.le), parse_scalar(o.ln), o.sign)), true, {}};
  });
  with_coupling(c2);
  c2->add_option("--sign", o.sign, "branch +1 or -1")->check(CLI::IsMember({1, -1}));
  auto *c3 = add("coro3", "map removing the Lorentz scalar term", [&] {
    return Outcome{coro3_json(coro3_map(parse_scalar(o.le), parse_scalar(o.ln))), true, {}};
  });
  with_coupling(c3);

  auto *cl = add("classify", "region label of a coupling pair", [&] {
    return Outcome{region_json(classify_region(parse_scalar(o.le), parse_scalar(o.ln))), true, {}};
  });
  with_coupling(cl);

  auto *rc = add("region-curves", "CSV of the critical curves", [&] {
    const GridSpec g = GridSpec::parse(o.grid);
    return Outcome{{}, true, region_curves_csv(region_curves(g))};
  });
  rc->add_option("--grid", o.grid, "le_min:le_max:n,ln_min:ln_max:n");

  auto *gt = add("gauge-theta", "continuous gauge angle along a lambda path (CSV)", [&] {
    std::vector<double> lam;
    if (!o.lambda_csv.empty()) {
      lam = read_lambda_csv(o.lambda_csv);
    } else {
      if (o.lambda_expr.empty())
        throw CLI::ValidationError("gauge-theta", "--lambda-expr or --lambda-csv is required");
      if (o.path_samples < 2)
        throw DomainError("--path-samples must be at least 2");
      const Expression e = Expression::parse(o.lambda_expr, {"t"});
      lam.resize(o.path_samples);
      for (std::size_t k = 0; k < o.path_samples; ++k)
        lam[k] = e(static_cast<double>(k) / static_cast<double>(o.path_samples - 1));
    }
    const GaugeAngle g = theta_from_lambda(lam, o.M);
    std::cerr << gauge_angle_json(g).dump() << "\n";
    return Outcome{{}, true, gauge_angle_csv(g)};
  });
  auto *expr_opt = gt->add_option("--lambda-expr", o.lambda_expr, "lambda(t) for t in [0, 1]");
  gt->add_option("--lambda-csv", o.lambda_csv, "CSV whose last column holds lambda")
      ->excludes(expr_opt);
  gt->add_option("--M", o.M, "mass parameter M > 0");
  gt->add_option("--path-samples", o.path_samples, "samples along the path");

  auto *gc = add("gauge-coeff", "boundary-coefficient residual", [&] {
    const Complex r = boundary_coeff_check(o.lambda, o.M);
    const Complex j = jump_coefficient(o.lambda, o.M);
    const Complex rhs = gauge_rhs(o.lambda, o.M);
    Json out{{"lambda", o.lambda},
             {"M", o.M},
             {"rhs", {rhs.real(), rhs.imag()}},
             {"jump_coefficient", {j.real(), j.imag()}},
             {"residual", std::abs(r)}};
    return Outcome{out, std::abs(r) <= 1e-12, {}};
  });
  gc->add_option("--lambda", o.lambda, "lambda value");
  gc->add_option("--M", o.M, "mass parameter M > 0");

  auto *ra = add("report-all", "every suite with default settings", [&] {
    std::vector<SuiteResult> suites;
    suites.push_back(algebra_suite());
    suites.push_back(symbolic_suite(o.seed));
    suites.push_back(param_suite(o.seed));
    suites.push_back(numeric_suite(NumericConfig{}));
    suites.push_back(jump_suite(1.0, {1, 2, 3}));
    suites.push_back(magnetic_suite(MagneticConfig{}));
    suites.push_back(gauge_suite(o.seed));
    Json arr = Json::array();
    bool ok = true;
    for (const auto &s : suites) {
      std::cerr << s.suite << ": " << (s.passed() ? "pass" : "FAIL") << " in " << s.seconds
                << " s\n";
      arr.push_back(s.to_json());
      ok = ok && s.passed();
    }
    return Outcome{Json{{"suites", arr}}, ok, {}};
  });
  ra->add_option("--seed", o.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return emit(command, o, handlers.at(command)());
  } catch (const CLI::ValidationError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError &e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  }
}
