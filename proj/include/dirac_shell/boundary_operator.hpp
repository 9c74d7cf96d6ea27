#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "dirac_shell/geometry.hpp"
#include "dirac_shell/types.hpp"

namespace dirac_shell {

using SampleHandle = std::shared_ptr<const BoundarySample>;

/// Spinor density on the nodes of a sample: one C^4 value per node, stored flat
/// (node-major, 4 components each).
class Density {
public:
  explicit Density(std::size_t nodes) : values_(Eigen::VectorXcd::Zero(4 * nodes)) {}
  explicit Density(Eigen::VectorXcd flat);
  explicit Density(const std::vector<SpinorVector> &values);

  std::size_t nodes() const { return static_cast<std::size_t>(values_.size() / 4); }
  SpinorVector at(std::size_t i) const { return values_.segment<4>(4 * i); }
  void set(std::size_t i, const SpinorVector &v) { values_.segment<4>(4 * i) = v; }
  const Eigen::VectorXcd &flat() const { return values_; }
  Eigen::VectorXcd &flat() { return values_; }

  /// Samples f at every node of `sample`.
  static Density from_function(const BoundarySample &sample,
                               const std::function<SpinorVector(const Vec3 &)> &f);

private:
  Eigen::VectorXcd values_;
};

/// Matrix representation convention. Plain acts on node values; symmetrized is
/// W^{1/2} A W^{-1/2} with W the quadrature weights, so formally self-adjoint
/// operators become (nearly) Hermitian matrices.
enum class Convention { Plain, Symmetrized };

/// Dense 4N x 4N complex matrix acting blockwise on spinor densities at the N
/// nodes of a sample. Stored in the plain convention.
class BoundaryOperator {
public:
  BoundaryOperator(SampleHandle sample, Eigen::MatrixXcd plain);

  /// Block-diagonal operator with block f(i) at node i.
  static BoundaryOperator block_diagonal(SampleHandle sample,
                                         const std::function<SpinorMatrix(std::size_t)> &f);
  static BoundaryOperator identity(SampleHandle sample);
  static BoundaryOperator zero(SampleHandle sample);
  /// Multiplication by alpha.N(x_i).
  static BoundaryOperator normal_multiplier(SampleHandle sample);

  std::size_t nodes() const { return sample_->size(); }
  const BoundarySample &sample() const { return *sample_; }
  const SampleHandle &sample_handle() const { return sample_; }

  const Eigen::MatrixXcd &matrix() const { return plain_; }
  Eigen::MatrixXcd matrix(Convention c) const;
  SpinorMatrix block(std::size_t i, std::size_t j) const;

  Density apply(const Density &g) const;

  BoundaryOperator operator+(const BoundaryOperator &o) const;
  BoundaryOperator operator-(const BoundaryOperator &o) const;
  BoundaryOperator operator*(const BoundaryOperator &o) const;
  BoundaryOperator operator-() const;
  friend BoundaryOperator operator*(Complex s, const BoundaryOperator &a);
  BoundaryOperator adjoint_symmetrized() const;

private:
  void require_same(const BoundaryOperator &o) const;

  SampleHandle sample_;
  Eigen::MatrixXcd plain_;
};

/// Orthonormal basis (in symmetrized coordinates) of the subspace on which
/// operator norms are measured. On sphere samples this is the span of the
/// spinor fields whose components are real spherical harmonics of degree
/// <= max_degree - 4; those are represented exactly by the grid and their images
/// under the operators studied here stay resolvable. Mesh samples use the
/// full space.
struct ResolvedBand {
  Eigen::MatrixXcd basis;
  int degree = -1;
  bool full_space = true;

  Eigen::Index dimension() const { return basis.cols(); }
};

/// `degree` < 0 selects max_degree - 4; larger values are clamped to it.
ResolvedBand resolved_band(const BoundarySample &sample, int degree = -1);
ResolvedBand full_band(const BoundarySample &sample);

/// A linear map given by its action on a block of plain-convention columns.
using PlainAction = std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd &)>;

/// Symmetrized image W^{1/2} T W^{-1/2} Q of the band basis Q under T.
Eigen::MatrixXcd band_image(const BoundarySample &sample, const ResolvedBand &band,
                            const PlainAction &action);

/// Singular values (descending) of T restricted to the band, measured in L^2(sigma).
Eigen::VectorXd band_singular_values(const BoundarySample &sample, const ResolvedBand &band,
                                     const PlainAction &action);

/// Largest / smallest singular value of T restricted to the band.
double band_norm(const BoundarySample &sample, const ResolvedBand &band, const PlainAction &action);
double band_min_singular(const BoundarySample &sample, const ResolvedBand &band,
                         const PlainAction &action);

/// Largest singular value over the whole discrete space by power iteration on
/// S^* S, given the actions of S and S^* (any fixed coordinates).
double full_space_norm(const PlainAction &forward, const PlainAction &adjoint, Eigen::Index dim,
                       int iterations = 300);

PlainAction action_of(const BoundaryOperator &op);

/// Hermitian defect ||Q^*(A_s - A_s^*)Q|| / ||Q^* A_s Q|| of the symmetrized matrix
/// compressed to the band.
double hermitian_defect(const BoundaryOperator &op, const ResolvedBand &band);

} // namespace dirac_shell
