#include "dirac_shell/shell_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dirac_shell/dirac_algebra.hpp"

namespace dirac_shell {

namespace {

// Multiplication by a + b alpha.N(x_i) at every node, as a block-diagonal operator.
BoundaryOperator affine_normal(SampleHandle sample, double a, double b) {
  const auto &normals = sample->normals;
  return BoundaryOperator::block_diagonal(sample, [&](std::size_t i) {
    return SpinorMatrix(a * identity4() + b * alpha_dot(normals[i]));
  });
}

Eigen::MatrixXcd apply_normal(const BoundarySample &s, const Eigen::MatrixXcd &x) {
  Eigen::MatrixXcd y(x.rows(), x.cols());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Eigen::Index r = 4 * static_cast<Eigen::Index>(i);
    y.middleRows<4>(r) = alpha_dot(s.normals[i]) * x.middleRows<4>(r);
  }
  return y;
}

void require_d(const CouplingParams &p, const char *who) {
  if (!std::isfinite(p.lambda_e) || !std::isfinite(p.lambda_n))
    throw DomainError(std::string(who) + ": coupling constants must be finite");
  if (p.d() == 0.0)
    throw DomainError(std::string(who) + ": lambda_e^2 - lambda_n^2 must be nonzero");
}

double max_abs(const Eigen::MatrixXcd &m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

} // namespace

SurfaceScalarField SurfaceScalarField::from_function(const BoundarySample &sample,
                                                     const std::function<double(const Vec3 &)> &f,
                                                     std::string description) {
  SurfaceScalarField out;
  out.description = std::move(description);
  out.values.reserve(sample.size());
  for (const Vec3 &x : sample.nodes) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw DomainError("SurfaceScalarField: non-finite value");
    out.values.push_back(v);
  }
  return out;
}

SurfaceScalarField SurfaceScalarField::constant(const BoundarySample &sample, double c) {
  return from_function(sample, [c](const Vec3 &) { return c; }, "constant");
}

double SurfaceScalarField::min_abs() const {
  double m = std::numeric_limits<double>::infinity();
  for (double v : values)
    m = std::min(m, std::abs(v));
  return m;
}

double gauge_gamma(const CouplingParams &p, double theta) {
  const double s = std::sin(0.5 * theta);
  return p.d() - (p.d() + 4.0) * s * s + 2.0 * p.lambda_n * std::sin(theta);
}

double gauge_lambda_n_prime(const CouplingParams &p, double theta) {
  return p.lambda_n * std::cos(theta) - 0.25 * (p.d() + 4.0) * std::sin(theta);
}

BoundaryOperator electrostatic_potential(const CouplingParams &p, SampleHandle sample) {
  return affine_normal(std::move(sample), p.lambda_e, p.lambda_n);
}

BoundaryOperator lambda_electrostatic(const CouplingParams &p, const BoundaryOperator &c_sigma) {
  require_d(p, "lambda_electrostatic");
  const double d = p.d();
  return affine_normal(c_sigma.sample_handle(), -p.lambda_e / d, p.lambda_n / d) - c_sigma;
}

BoundaryOperator lambda_z(const CouplingParams &p, double theta, const BoundaryOperator &c_sigma) {
  require_d(p, "lambda_z");
  const double g = gauge_gamma(p, theta);
  if (g == 0.0)
    throw DomainError("lambda_z: gamma vanishes for these parameters");
  return affine_normal(c_sigma.sample_handle(), -p.lambda_e / g, gauge_lambda_n_prime(p, theta) / g) -
         c_sigma;
}

BoundaryOperator lambda_magnetic(const SurfaceScalarField &lambda, const BoundaryOperator &c_sigma) {
  const BoundarySample &s = c_sigma.sample();
  if (lambda.values.size() != s.size())
    throw std::invalid_argument("lambda_magnetic: field has wrong node count");
  if (!(lambda.min_abs() > 0.0))
    throw DomainError("lambda_magnetic: lambda vanishes at a node");
  const auto &normals = s.normals;
  const auto &v = lambda.values;
  return BoundaryOperator::block_diagonal(c_sigma.sample_handle(), [&](std::size_t i) {
           return SpinorMatrix(-alpha_dot(normals[i]) / v[i]);
         }) -
         c_sigma;
}

BoundaryOperator lambda_plus(const CouplingParams &p, const BoundaryOperator &c_sigma) {
  require_d(p, "lambda_plus");
  const double d = p.d();
  return affine_normal(c_sigma.sample_handle(), p.lambda_e / d, -p.lambda_n / d) + c_sigma;
}

BoundaryOperator lambda_minus(const CouplingParams &p, const BoundaryOperator &c_sigma) {
  require_d(p, "lambda_minus");
  const double d = p.d();
  return affine_normal(c_sigma.sample_handle(), p.lambda_e / d, p.lambda_n / d) - c_sigma;
}

double electrostatic_potential_residual(const CouplingParams &p, const BoundaryOperator &c_sigma) {
  const BoundaryOperator lam = lambda_electrostatic(p, c_sigma);
  const BoundaryOperator v = electrostatic_potential(p, c_sigma.sample_handle());
  const BoundaryOperator local = lam + c_sigma;
  // Both factors are block-diagonal; compare the diagonal blocks and the off-diagonal part.
  double worst = 0.0;
  for (std::size_t i = 0; i < c_sigma.nodes(); ++i) {
    const SpinorMatrix r = v.block(i, i) * local.block(i, i) + identity4();
    worst = std::max(worst, max_abs(r));
  }
  Eigen::MatrixXcd off = local.matrix();
  for (std::size_t i = 0; i < c_sigma.nodes(); ++i)
    off.block<4, 4>(4 * i, 4 * i).setZero();
  return std::max(worst, max_abs(off));
}

double magnetic_potential_residual(const SurfaceScalarField &lambda,
                                   const BoundaryOperator &c_sigma) {
  const BoundaryOperator lam = lambda_magnetic(lambda, c_sigma);
  const BoundaryOperator local = lam + c_sigma;
  const BoundarySample &s = c_sigma.sample();
  double worst = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const SpinorMatrix v = lambda.values[i] * alpha_dot(s.normals[i]);
    worst = std::max(worst, max_abs(v * local.block(i, i) + identity4()));
  }
  Eigen::MatrixXcd off = local.matrix();
  for (std::size_t i = 0; i < s.size(); ++i)
    off.block<4, 4>(4 * i, 4 * i).setZero();
  return std::max(worst, max_abs(off));
}

double plus_relation_residual(const CouplingParams &p, const BoundaryOperator &c_sigma) {
  return max_abs((lambda_electrostatic(p, c_sigma) + lambda_plus(p, c_sigma)).matrix());
}

double intertwine_defect(const CouplingParams &p, double theta, const BoundaryOperator &c_sigma,
                         const ResolvedBand &band) {
  const BoundarySample &s = c_sigma.sample();
  const BoundaryOperator lam = lambda_electrostatic(p, c_sigma);
  const BoundaryOperator lam_z = lambda_z(p, theta, c_sigma);
  const Complex z = std::polar(1.0, theta);
  const Complex half_plus = 0.5 * (1.0 + z);
  const Complex minus_i = (1.0 - z) * kI;
  const Eigen::MatrixXcd &c = c_sigma.matrix();
  const Eigen::MatrixXcd &l = lam.matrix();
  const Eigen::MatrixXcd &lz = lam_z.matrix();
  PlainAction defect = [&](const Eigen::MatrixXcd &x) -> Eigen::MatrixXcd {
    const Eigen::MatrixXcd lx = l * x;
    const Eigen::MatrixXcd ax = half_plus * x + minus_i * apply_normal(s, lx + c * x);
    const Eigen::MatrixXcd blx = half_plus * lx - minus_i * (c * apply_normal(s, lx));
    return lz * ax - blx;
  };
  return band_norm(s, band, defect);
}

double intertwine_defect(const CouplingParams &p, double theta, const BoundaryOperator &c_sigma) {
  return intertwine_defect(p, theta, c_sigma, resolved_band(c_sigma.sample()));
}

double factorization_defect(const CouplingParams &p, const BoundaryOperator &c_sigma,
                            const ResolvedBand &band) {
  const BoundarySample &s = c_sigma.sample();
  const BoundaryOperator plus = lambda_plus(p, c_sigma);
  const BoundaryOperator minus = lambda_minus(p, c_sigma);
  const double d = p.d();
  const Eigen::MatrixXcd &c = c_sigma.matrix();
  const Eigen::MatrixXcd &lp = plus.matrix();
  const Eigen::MatrixXcd &lm = minus.matrix();
  PlainAction defect = [&](const Eigen::MatrixXcd &x) -> Eigen::MatrixXcd {
    const Eigen::MatrixXcd lhs = lp * (lm * x);
    const Eigen::MatrixXcd anti = c * apply_normal(s, x) + apply_normal(s, c * x);
    const Eigen::MatrixXcd rhs =
        (1.0 / d - 0.25) * x + (p.lambda_n / d) * anti - c * apply_normal(s, anti);
    return lhs - rhs;
  };
  return band_norm(s, band, defect);
}

double factorization_defect(const CouplingParams &p, const BoundaryOperator &c_sigma) {
  return factorization_defect(p, c_sigma, resolved_band(c_sigma.sample()));
}

double fredholm_gap(const BoundaryOperator &lambda, const ResolvedBand &band) {
  return band_min_singular(lambda.sample(), band, action_of(lambda));
}

double fredholm_gap(const BoundaryOperator &lambda) {
  return fredholm_gap(lambda, resolved_band(lambda.sample()));
}

} // namespace dirac_shell
