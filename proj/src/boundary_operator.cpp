#include "dirac_shell/boundary_operator.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "dirac_shell/dirac_algebra.hpp"
#include "dirac_shell/spherical_harmonics.hpp"

namespace dirac_shell {

Density::Density(Eigen::VectorXcd flat) : values_(std::move(flat)) {
  if (values_.size() % 4 != 0)
    throw std::invalid_argument("Density: flat length must be a multiple of 4");
}

Density::Density(const std::vector<SpinorVector> &values)
    : values_(Eigen::VectorXcd(4 * values.size())) {
  for (std::size_t i = 0; i < values.size(); ++i)
    values_.segment<4>(4 * i) = values[i];
}

Density Density::from_function(const BoundarySample &sample,
                               const std::function<SpinorVector(const Vec3 &)> &f) {
  Density d(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i)
    d.set(i, f(sample.nodes[i]));
  return d;
}

BoundaryOperator::BoundaryOperator(SampleHandle sample, Eigen::MatrixXcd plain)
    : sample_(std::move(sample)), plain_(std::move(plain)) {
  if (!sample_)
    throw std::invalid_argument("BoundaryOperator: null sample");
  const auto n = static_cast<Eigen::Index>(4 * sample_->size());
  if (plain_.rows() != n || plain_.cols() != n)
    throw std::invalid_argument("BoundaryOperator: matrix is " + std::to_string(plain_.rows()) +
                                "x" + std::to_string(plain_.cols()) + ", sample needs " +
                                std::to_string(n));
}

BoundaryOperator
BoundaryOperator::block_diagonal(SampleHandle sample,
                                 const std::function<SpinorMatrix(std::size_t)> &f) {
  const std::size_t n = sample->size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4 * n, 4 * n);
  for (std::size_t i = 0; i < n; ++i)
    m.block<4, 4>(4 * i, 4 * i) = f(i);
  return BoundaryOperator(std::move(sample), std::move(m));
}

BoundaryOperator BoundaryOperator::identity(SampleHandle sample) {
  const auto n = static_cast<Eigen::Index>(4 * sample->size());
  return BoundaryOperator(std::move(sample), Eigen::MatrixXcd::Identity(n, n));
}

BoundaryOperator BoundaryOperator::zero(SampleHandle sample) {
  const auto n = static_cast<Eigen::Index>(4 * sample->size());
  return BoundaryOperator(std::move(sample), Eigen::MatrixXcd::Zero(n, n));
}

BoundaryOperator BoundaryOperator::normal_multiplier(SampleHandle sample) {
  const BoundarySample &s = *sample;
  return block_diagonal(std::move(sample),
                        [&s](std::size_t i) { return alpha_dot(s.normals[i]); });
}

namespace {

Eigen::VectorXd sqrt_weights(const BoundarySample &s) {
  Eigen::VectorXd d(4 * s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    d.segment<4>(4 * i).setConstant(std::sqrt(s.weights[i]));
  return d;
}

} // namespace

Eigen::MatrixXcd BoundaryOperator::matrix(Convention c) const {
  if (c == Convention::Plain)
    return plain_;
  const Eigen::VectorXd sw = sqrt_weights(*sample_);
  return sw.asDiagonal() * plain_ * sw.cwiseInverse().asDiagonal();
}

SpinorMatrix BoundaryOperator::block(std::size_t i, std::size_t j) const {
  return plain_.block<4, 4>(4 * i, 4 * j);
}

Density BoundaryOperator::apply(const Density &g) const {
  if (g.nodes() != nodes())
    throw std::invalid_argument("BoundaryOperator::apply: density has wrong node count");
  return Density(Eigen::VectorXcd(plain_ * g.flat()));
}

void BoundaryOperator::require_same(const BoundaryOperator &o) const {
  if (sample_ != o.sample_ && sample_->size() != o.sample_->size())
    throw std::invalid_argument("BoundaryOperator: operands live on different samples");
}

BoundaryOperator BoundaryOperator::operator+(const BoundaryOperator &o) const {
  require_same(o);
  return BoundaryOperator(sample_, plain_ + o.plain_);
}

BoundaryOperator BoundaryOperator::operator-(const BoundaryOperator &o) const {
  require_same(o);
  return BoundaryOperator(sample_, plain_ - o.plain_);
}

BoundaryOperator BoundaryOperator::operator*(const BoundaryOperator &o) const {
  require_same(o);
  return BoundaryOperator(sample_, plain_ * o.plain_);
}

BoundaryOperator BoundaryOperator::operator-() const { return BoundaryOperator(sample_, -plain_); }

BoundaryOperator operator*(Complex s, const BoundaryOperator &a) {
  return BoundaryOperator(a.sample_, s * a.plain_);
}

BoundaryOperator BoundaryOperator::adjoint_symmetrized() const {
  // (W^{1/2} A W^{-1/2})^* expressed back in the plain convention.
  const Eigen::VectorXd sw = sqrt_weights(*sample_);
  Eigen::MatrixXcd s = matrix(Convention::Symmetrized).adjoint();
  return BoundaryOperator(sample_, sw.cwiseInverse().asDiagonal() * s * sw.asDiagonal());
}

ResolvedBand full_band(const BoundarySample &sample) {
  const auto n = static_cast<Eigen::Index>(4 * sample.size());
  return {Eigen::MatrixXcd::Identity(n, n), -1, true};
}

ResolvedBand resolved_band(const BoundarySample &sample, int requested) {
  const SurfaceDescriptor &d = sample.descriptor;
  if (d.kind != SurfaceKind::Sphere)
    return full_band(sample);
  const int top = std::max(0, d.max_degree() - 4);
  const int degree = requested < 0 ? top : std::min(requested, top);
  const int nh = harmonic_count(degree);
  const std::size_t n = sample.size();
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(4 * n, 4 * nh);
  std::vector<double> y(nh);
  for (std::size_t j = 0; j < n; ++j) {
    real_spherical_harmonics(degree, sample.normals[j], y);
    const double s = std::sqrt(sample.weights[j]) / d.radius;
    for (int h = 0; h < nh; ++h)
      for (int c = 0; c < 4; ++c)
        q(4 * j + c, 4 * h + c) = s * y[h];
  }
  return {std::move(q), degree, false};
}

Eigen::MatrixXcd band_image(const BoundarySample &sample, const ResolvedBand &band,
                            const PlainAction &action) {
  const Eigen::VectorXd sw = sqrt_weights(sample);
  Eigen::MatrixXcd plain_in = sw.cwiseInverse().asDiagonal() * band.basis;
  Eigen::MatrixXcd out = action(plain_in);
  return sw.asDiagonal() * out;
}

Eigen::VectorXd band_singular_values(const BoundarySample &sample, const ResolvedBand &band,
                                     const PlainAction &action) {
  const Eigen::MatrixXcd x = band_image(sample, band, action);
  const Eigen::MatrixXcd gram = x.adjoint() * x;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  Eigen::VectorXd sv(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    sv(i) = std::sqrt(std::max(0.0, ev(ev.size() - 1 - i)));
  return sv;
}

double band_norm(const BoundarySample &sample, const ResolvedBand &band,
                 const PlainAction &action) {
  const Eigen::VectorXd sv = band_singular_values(sample, band, action);
  return sv.size() ? sv(0) : 0.0;
}

double band_min_singular(const BoundarySample &sample, const ResolvedBand &band,
                         const PlainAction &action) {
  const Eigen::VectorXd sv = band_singular_values(sample, band, action);
  return sv.size() ? sv(sv.size() - 1) : 0.0;
}

double full_space_norm(const PlainAction &forward, const PlainAction &adjoint, Eigen::Index dim,
                       int iterations) {
  // Deterministic start vector with all components populated.
  Eigen::MatrixXcd v(dim, 1);
  for (Eigen::Index i = 0; i < dim; ++i)
    v(i, 0) = Complex(std::cos(0.37 * i + 0.1), std::sin(1.13 * i + 0.2));
  v /= v.norm();
  double sigma = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Eigen::MatrixXcd w = adjoint(forward(v));
    const double nrm = w.norm();
    if (nrm == 0.0)
      return 0.0;
    const double next = std::sqrt(nrm);
    v = w / nrm;
    if (it > 10 && std::abs(next - sigma) <= 1e-10 * next) {
      sigma = next;
      break;
    }
    sigma = next;
  }
  return sigma;
}

PlainAction action_of(const BoundaryOperator &op) {
  return [&op](const Eigen::MatrixXcd &x) -> Eigen::MatrixXcd { return op.matrix() * x; };
}

double hermitian_defect(const BoundaryOperator &op, const ResolvedBand &band) {
  const Eigen::MatrixXcd x = band_image(op.sample(), band, action_of(op));
  const Eigen::MatrixXcd compressed = band.basis.adjoint() * x;
  const Eigen::MatrixXcd skew = compressed - compressed.adjoint();
  auto norm2 = [](const Eigen::MatrixXcd &a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.adjoint() * a, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  };
  const double denom = norm2(compressed);
  return denom == 0.0 ? 0.0 : norm2(skew) / denom;
}

} // namespace dirac_shell
