#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirac_shell/boundary_operator.hpp"

namespace dirac_shell {

using Json = nlohmann::ordered_json;

/// One check's outcome in the common report schema
/// {check, surface, level, m, params, defect, extrapolation_table} plus pass/fail.
struct CheckReport {
  std::string check;
  std::string surface = "none";
  int level = 0;
  double m = 0.0;
  Json params = Json::object();
  double defect = 0.0;
  Json extrapolation_table = Json::array();
  bool passed = true;
  std::vector<std::string> failures;
  Json details = Json::object();

  explicit CheckReport(std::string name, std::string surf = "none", int lvl = 0, double mass = 0.0)
      : check(std::move(name)), surface(std::move(surf)), level(lvl), m(mass) {}

  void require(bool ok, const std::string &what);
  Json to_json() const;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> reports;
  double seconds = 0.0; ///< wall time; reported separately from the deterministic part

  bool passed() const;
  Json to_json() const;
};

struct NumericConfig {
  double m = 1.0;
  std::vector<int> levels{2, 3, 4};
  /// Band degree shared by all levels; -1 picks the coarsest level's resolved band.
  int band_degree = -1;
  double lambda_e = 3.0, lambda_n = 1.0;
  double theta = 3.14159265358979323846;
  /// Also report the Calderon defect over the whole discrete space.
  bool full_space = false;
};

struct MagneticConfig {
  double m = 1.0;
  std::vector<int> levels{3, 4, 5};
  double tau_ratio = 0.1;
  double slack = 0.1;
  double sup_tolerance = 0.2;
};

SuiteResult algebra_suite();
SuiteResult symbolic_suite(std::uint64_t seed, std::size_t samples = 100);
SuiteResult param_suite(std::uint64_t seed, std::size_t samples = 100);
SuiteResult numeric_suite(const NumericConfig &cfg);
SuiteResult jump_suite(double m, const std::vector<int> &levels);
SuiteResult magnetic_suite(const MagneticConfig &cfg);
SuiteResult gauge_suite(std::uint64_t seed, std::size_t rhs_samples = 10000,
                        std::size_t coeff_samples = 1000);

/// Sampling of lambda(x) = 2 + x_3 on a sample, the coupling used by the magnetic checks.
std::vector<double> default_magnetic_lambda(const BoundarySample &sample);

} // namespace dirac_shell
