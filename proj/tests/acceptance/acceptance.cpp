#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dirac_shell/suites.hpp"

using namespace dirac_shell;

namespace {

struct Line {
  bool passed = false;
  std::string summary;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string first_failure(const SuiteResult &s) {
  for (const auto &r : s.reports)
    if (!r.passed)
      return r.check + ": " + (r.failures.empty() ? std::string("failed") : r.failures.front());
  return {};
}

Line from_suite(const SuiteResult &s, double budget_seconds, const std::string &extra) {
  Line l;
  const bool fast = budget_seconds <= 0 || s.seconds < budget_seconds;
  l.passed = s.passed() && fast;
  l.summary = extra + " runtime " + fmt(s.seconds) + " s";
  if (budget_seconds > 0)
    l.summary += " (budget " + fmt(budget_seconds) + " s)";
  if (!s.passed())
    l.summary += "; " + first_failure(s);
  return l;
}

const CheckReport *find(const SuiteResult &s, const std::string &check) {
  for (const auto &r : s.reports)
    if (r.check == check)
      return &r;
  return nullptr;
}

Line criterion1() {
  const SuiteResult s = algebra_suite();
  return from_suite(s, 1.0, "Clifford identities exact and zero-tolerance;");
}

Line criterion2() {
  const SuiteResult s = symbolic_suite(7, 100);
  double worst = 0;
  for (const auto &r : s.reports)
    if (r.check.rfind("identity:", 0) == 0)
      worst = std::max(worst, r.defect);
  return from_suite(s, 10.0, "catalogue x100 samples, max deviation " + fmt(worst) + ";");
}

Line criterion3() {
  const SuiteResult s = param_suite(7, 100);
  return from_suite(s, 0.0, "involution grid, coro3, cross-consistency, 101x101 classify;");
}

Line criterion4() {
  const SuiteResult s = numeric_suite(NumericConfig{});
  const CheckReport *r = find(s, "calderon_refinement");
  std::string cal;
  if (r)
    for (const auto &v : r->details["calderon"])
      cal += (cal.empty() ? "" : " -> ") + fmt(v.get<double>());
  return from_suite(s, 0.0, "Calderon defect " + cal + ";");
}

Line criterion5() {
  const SuiteResult s = jump_suite(1.0, {1, 2, 3});
  const CheckReport *r = find(s, "jump_refinement");
  std::string j;
  if (r)
    for (const auto &v : r->details["jump"])
      j += (j.empty() ? "" : " -> ") + fmt(v.get<double>());
  return from_suite(s, 0.0, "jump defect " + j + ";");
}

Line criterion6() {
  const SuiteResult s = magnetic_suite(MagneticConfig{});
  const CheckReport *r = find(s, "magnetic_refinement");
  std::string sup;
  if (r)
    for (const auto &v : r->details["sup"])
      sup += (sup.empty() ? "" : ", ") + fmt(v.get<double>());
  return from_suite(s, 0.0, "sup |x-z| ||K|| = " + sup + ";");
}

Line criterion7() {
  const SuiteResult s = gauge_suite(7);
  return from_suite(s, 5.0, "rhs modulus, boundary residual, unwrapping;");
}

nlohmann::ordered_json run_report_all(const std::string &cli, const std::string &path) {
  const std::string cmd = "\"" + cli + "\" report-all --seed 7 --output \"" + path + "\" 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  if (rc == -1)
    throw std::runtime_error("cannot launch " + cli);
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("no report written by " + cli);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(in);
  j.erase("timestamp");
  return j;
}

Line criterion8(const std::string &cli) {
  Line l;
  if (cli.empty()) {
    l.summary = "CLI path not given";
    return l;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::string base = std::filesystem::temp_directory_path() / "dirac_shell_determinism_";
  const auto a = run_report_all(cli, base + "a.json");
  const auto b = run_report_all(cli, base + "b.json");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  l.passed = a == b && a.contains("result");
  l.summary = std::string(a == b ? "reports identical" : "reports differ") +
              " apart from the timestamp; runtime " + fmt(secs) + " s";
  return l;
}

const char *kNames[] = {"",
                        "exact algebra suite",
                        "symbolic rail",
                        "parameter-map suite",
                        "numeric rail",
                        "jump suite",
                        "magnetic suite",
                        "gauge suite",
                        "determinism"};

} // namespace

int main(int argc, char **argv) {
  int only = 0;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else if (a == "--cli" && i + 1 < argc)
      cli = argv[++i];
    else {
      std::cerr << "usage: acceptance [--criterion N] [--cli PATH]\n";
      return 2;
    }
  }
  if (only < 0 || only > 8) {
    std::cerr << "criterion must be 1..8\n";
    return 2;
  }
  bool all = true;
  for (int k = 1; k <= 8; ++k) {
    if (only && k != only)
      continue;
    Line l;
    try {
      switch (k) {
      case 1: l = criterion1(); break;
      case 2: l = criterion2(); break;
      case 3: l = criterion3(); break;
      case 4: l = criterion4(); break;
      case 5: l = criterion5(); break;
      case 6: l = criterion6(); break;
      case 7: l = criterion7(); break;
      default: l = criterion8(cli); break;
      }
    } catch (const std::exception &e) {
      l.passed = false;
      l.summary = std::string("exception: ") + e.what();
    }
    std::cout << (l.passed ? "PASS" : "FAIL") << " criterion " << k << " (" << kNames[k]
              << "): " << l.summary << std::endl;
    all = all && l.passed;
  }
  return all ? 0 : 1;
}
