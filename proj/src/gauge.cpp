#include "dirac_shell/gauge.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dirac_shell/dirac_algebra.hpp"

namespace dirac_shell {

PiecewiseField::PiecewiseField(std::vector<SpinorVector> values, std::vector<Region> tags,
                               std::vector<double> weights)
    : base_(std::move(values)), tags_(std::move(tags)), weights_(std::move(weights)) {
  if (tags_.size() != base_.size() || weights_.size() != base_.size())
    throw std::invalid_argument("PiecewiseField: values, tags and weights differ in length");
}

PiecewiseField PiecewiseField::straddle(const BoundarySample &sample, double delta,
                                        const std::function<SpinorVector(const Vec3 &)> &f) {
  if (!(delta > 0.0))
    throw std::invalid_argument("PiecewiseField::straddle: delta must be positive");
  std::vector<SpinorVector> v;
  std::vector<Region> t;
  std::vector<double> w;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const Vec3 x = sample.nodes[i], n = sample.normals[i];
    v.push_back(f(x - delta * n));
    t.push_back(Region::Inside);
    w.push_back(sample.weights[i]);
    v.push_back(f(x + delta * n));
    t.push_back(Region::Outside);
    w.push_back(sample.weights[i]);
  }
  return PiecewiseField(std::move(v), std::move(t), std::move(w));
}

SpinorVector PiecewiseField::value(std::size_t k) const {
  if (tags_[k] == Region::Inside || phase_ == 0.0)
    return base_[k];
  return std::polar(1.0, phase_) * base_[k];
}

double PiecewiseField::weighted_norm() const {
  double s = 0.0;
  for (std::size_t k = 0; k < size(); ++k)
    s += weights_[k] * value(k).squaredNorm();
  return std::sqrt(s);
}

PiecewiseField u_z_apply(const PiecewiseField &f, double theta) {
  PiecewiseField out = f;
  out.phase_ -= theta;
  return out;
}

Density gauge_eta_gradient(double lambda_n, const BoundarySample &sample,
                           const SpinorVector &reference) {
  Density g(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i)
    g.set(i, lambda_n * (alpha_dot(sample.normals[i]) * reference));
  return g;
}

Vec3 eta_curl_proxy(double lambda_n, const BoundarySample &sample, const Vec3 &c) {
  Vec3 s = Vec3::Zero();
  for (std::size_t i = 0; i < sample.size(); ++i)
    s += sample.weights[i] * lambda_n * sample.normals[i].cross(c);
  return s;
}

Complex gauge_rhs(double lambda, double M) {
  // w / conj(w) with w = (lambda + 2i)(lambda + M - 2i).
  const Complex w = Complex(lambda, 2.0) * Complex(lambda + M, -2.0);
  return w / std::conj(w);
}

namespace {

void require_admissible(double lambda, double M, const char *who) {
  if (!(M > 0.0) || !std::isfinite(M))
    throw DomainError(std::string(who) + ": M must be positive");
  if (!std::isfinite(lambda) || !(lambda + M > 0.0))
    throw DomainError(std::string(who) + ": lambda + M must be positive");
}

} // namespace

double GaugeAngle::max_second_difference() const {
  double m = 0.0;
  for (std::size_t k = 1; k + 1 < theta.size(); ++k)
    m = std::max(m, std::abs(theta[k + 1] - 2.0 * theta[k] + theta[k - 1]));
  return m;
}

double GaugeAngle::reconstruction_error() const {
  double m = 0.0;
  for (std::size_t k = 0; k < theta.size(); ++k)
    m = std::max(m, std::abs(std::polar(1.0, theta[k]) - rhs[k]));
  return m;
}

GaugeAngle theta_from_lambda(const std::vector<double> &lambda, double M, double ambiguity) {
  GaugeAngle g;
  g.lambda = lambda;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    require_admissible(lambda[k], M, "theta_from_lambda");
    const Complex r = gauge_rhs(lambda[k], M);
    const double principal = std::arg(r);
    g.rhs.push_back(r);
    if (k == 0) {
      g.theta.push_back(principal);
      g.winding.push_back(0);
      continue;
    }
    const double prev = g.theta.back();
    const double raw = principal - prev;
    const long turns = std::lround(raw / (2.0 * kPi));
    const double step = raw - 2.0 * kPi * static_cast<double>(turns);
    if (std::abs(step) > kPi - ambiguity)
      throw DomainError("theta_from_lambda: ambiguous unwrapping between samples " +
                        std::to_string(k - 1) + " and " + std::to_string(k) +
                        " (argument jump near pi); refine the path");
    g.theta.push_back(prev + step);
    g.winding.push_back(std::lround((prev + step - principal) / (2.0 * kPi)));
    g.max_step = std::max(g.max_step, std::abs(step));
  }
  return g;
}

Complex jump_coefficient(double lambda, double M) {
  return Complex(lambda + M, 2.0) / Complex(-(lambda + M), 2.0);
}

Complex boundary_coeff_check(double lambda, double M) {
  require_admissible(lambda, M, "boundary_coeff_check");
  return Complex(0.5 * lambda, -1.0) * gauge_rhs(lambda, M) * jump_coefficient(lambda, M) +
         Complex(0.5 * lambda, 1.0);
}

} // namespace dirac_shell
