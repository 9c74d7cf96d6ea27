#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dirac_shell/coupling.hpp"

namespace dirac_shell {

/// A real number that is either an exact rational or a floating approximation.
/// Arithmetic stays exact while every operand is exact.
class Scalar {
public:
  Scalar() : exact_(true), q_(0), x_(0.0) {}
  Scalar(const mpq_class &q); // NOLINT
  Scalar(long v) : Scalar(mpq_class(v)) {} // NOLINT
  static Scalar approx(double x);

  bool is_exact() const { return exact_; }
  const mpq_class &rational() const;
  double value() const { return x_; }

  /// Zero test: exact for rationals, |x| <= tol otherwise.
  bool is_zero(double tol) const;
  int sign(double tol) const;

  friend Scalar operator+(const Scalar &a, const Scalar &b);
  friend Scalar operator-(const Scalar &a, const Scalar &b);
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  /// Throws DomainError on exact division by zero.
  friend Scalar operator/(const Scalar &a, const Scalar &b);
  friend Scalar operator-(const Scalar &a);

  /// Exact rationals print as "p/q" or "p"; approximations as shortest round-trip decimal.
  std::string to_string() const;

private:
  bool exact_;
  mpq_class q_;
  double x_;
};

/// Decimal literals ("-1.5", "2e-3") and fractions ("1/3") parse exactly;
/// anything else is evaluated as a constant expression ("sqrt(5)").
Scalar parse_scalar(const std::string &text);

/// Angle stored exactly when it is an integer multiple of pi/2.
class Angle {
public:
  static Angle quarter_turns(long k);
  static Angle radians(double t);
  /// Accepts "0", "pi", "-pi/2", "3*pi/2", "2pi", or any constant expression.
  static Angle parse(const std::string &text);

  double value() const { return radians_; }
  std::optional<long> quarter() const { return quarter_; }
  Scalar cos() const;
  Scalar sin() const;
  std::string to_string() const;

private:
  std::optional<long> quarter_;
  double radians_ = 0.0;
};

struct Predicate {
  std::string name;
  bool passed = false;
  bool exact = false;
  /// Value that must be nonzero.
  double residual = 0.0;
};

struct ParamPair {
  Scalar lambda_e;
  Scalar lambda_n;
  CouplingParams to_double() const { return {lambda_e.value(), lambda_n.value()}; }
};

struct TransformResult {
  Scalar gamma;
  Scalar lambda_n_prime;
  /// (gamma le, gamma ln') / (le^2 - ln'^2); absent when the denominator vanishes.
  std::optional<ParamPair> target;
  std::vector<Predicate> predicates;
  bool exact = false;

  bool admissible() const;
};

constexpr double kMapTolerance = 1e-12;

/// gamma = (d+4)(1 + cos t)/2 - 4 + 2 ln sin t, ln' = ln cos t - (d+4) sin t / 4 and the
/// target coupling, with predicates d != 0, d != 4, gamma != 0, le^2 - ln'^2 != 0 and
/// le^2 - ln'^2 != gamma^2/4. Exact when all inputs are.
TransformResult transform(const Scalar &lambda_e, const Scalar &lambda_n, const Angle &theta,
                          double tol = kMapTolerance);

/// (-4 le/d, 4 ln/d). Throws DomainError when d is 0 or 4.
ParamPair coro1_map(const Scalar &lambda_e, const Scalar &lambda_n, double tol = kMapTolerance);

/// ((sign * 2 ln - 4)/le, 0) for d = -4. Throws DomainError when le = 0 or d != -4.
ParamPair coro2_map(const Scalar &lambda_e, const Scalar &lambda_n, int sign,
                    double tol = kMapTolerance);

struct Coro3Theta {
  double theta = 0.0;
  double cos_theta = 0.0;
  /// p/den, (p+q)/den, (p-q)/den.
  std::vector<double> forbidden_cos;
  bool used_fallback = false;
};

/// theta with tan theta = 4 ln/(d+4) avoiding the forbidden cosines; principal
/// arctangent first, theta + pi otherwise. Throws DomainError when le or ln is 0,
/// |d| is 0 or 4, or d +- 2 le = 4.
Coro3Theta coro3_theta(const Scalar &lambda_e, const Scalar &lambda_n, double tol = kMapTolerance);

struct Coro3Result {
  Coro3Theta theta;
  /// (2 ln (1 + cos t)/sin t - 4)/le.
  double value = 0.0;
  double gamma = 0.0;
  double lambda_n_prime = 0.0;
  ParamPair target;
};

Coro3Result coro3_map(const Scalar &lambda_e, const Scalar &lambda_n, double tol = kMapTolerance);

struct RegionLabel {
  Scalar d;
  bool on_d0 = false;
  bool on_d4 = false;
  bool on_dm4 = false;
  bool on_red_plus = false;  ///< d + 2 le = 4
  bool on_red_minus = false; ///< d - 2 le = 4
  /// Subset of {"self_adjoint", "coro1", "coro2", "coro3"}.
  std::vector<std::string> applicable;
  bool exact = false;

  bool on_abs_d4() const { return on_d4 || on_dm4; }
};

RegionLabel classify_region(const Scalar &lambda_e, const Scalar &lambda_n,
                            double tol = kMapTolerance);

struct GridSpec {
  double le_min = -5, le_max = 5;
  int le_count = 101;
  double ln_min = -5, ln_max = 5;
  int ln_count = 101;

  /// "le_min:le_max:n,ln_min:ln_max:n". Throws ParseError when malformed and
  /// DomainError for empty ranges or fewer than two points.
  static GridSpec parse(const std::string &text);
  void validate() const;
};

struct CurvePoint {
  std::string curve_id;
  double lambda_e;
  double lambda_n;
};

/// Samples of d = 0, d = 4, d = -4, d + 2 le = 4 and d - 2 le = 4 inside the grid box.
std::vector<CurvePoint> region_curves(const GridSpec &grid);
/// CSV with header curve_id,lambda_e,lambda_n.
std::string region_curves_csv(const std::vector<CurvePoint> &points);

} // namespace dirac_shell
