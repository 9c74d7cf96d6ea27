#pragma once

#include <functional>
#include <vector>

#include "dirac_shell/boundary_operator.hpp"
#include "dirac_shell/kernels.hpp"
#include "dirac_shell/quadrature.hpp"

namespace dirac_shell {

enum class PVScheme {
  /// PolarSpectral on sphere samples, NodePuncture otherwise.
  Auto,
  /// Drop sample nodes within the cap radius of the target, Richardson over radii.
  NodePuncture,
  /// Sphere only: densities are interpolated by spherical harmonics and the
  /// integral outside each geodesic cap is evaluated with a Gauss-Legendre x
  /// trapezoid rule in polar coordinates about the target; Richardson over radii.
  PolarSpectral,
};

/// Principal-value strategy: punctured quadrature over a decreasing sequence of
/// cap radii followed by polynomial extrapolation to radius 0.
struct PVStrategy {
  PVScheme scheme = PVScheme::Auto;
  /// Geodesic (sphere) or chordal (mesh) cap radii in length units. Empty picks
  /// a default scaled to the sample.
  std::vector<double> cap_radii;
  /// Polar rule sizes; 0 picks a default from the sample's harmonic degree.
  int radial_nodes = 0;
  int azimuthal_nodes = 0;
};

struct ExtrapolationRow {
  double radius;
  /// ||R(radius) - R(0)||_F / ||R(0)||_F for the first target row.
  double relative_change;
};

struct AssemblyResult {
  BoundaryOperator op;
  PVScheme scheme;
  std::vector<ExtrapolationRow> extrapolation_table;
};

/// Discretised principal-value operator
///   C_sigma g(x) = lim_{eps -> 0} int_{|x - z| > eps} phi(x - z) g(z) dsigma(z).
/// Errors: DomainError for a single-node sample, for radii below the node
/// spacing with NodePuncture, or PolarSpectral on a non-sphere sample.
AssemblyResult assemble_C_detailed(SampleHandle sample, MassParameter m,
                                   const PVStrategy &pv = {});
BoundaryOperator assemble_C(SampleHandle sample, MassParameter m, const PVStrategy &pv = {});

/// Cap radii used when the strategy leaves them empty.
std::vector<double> default_cap_radii(const BoundarySample &sample, PVScheme scheme);

/// Spherical-harmonic interpolation of spinor densities on a sphere sample.
/// Exact for fields whose components have degree <= max_degree().
class SphereInterpolator {
public:
  explicit SphereInterpolator(const BoundarySample &sample);

  int max_degree() const { return degree_; }
  int harmonic_count() const { return static_cast<int>(analysis_.rows()); }
  /// harmonic_count x N real matrix; coefficients = analysis() * node values.
  const Eigen::MatrixXd &analysis() const { return analysis_; }
  /// harmonic_count x 4 coefficient matrix of a density.
  Eigen::MatrixXcd coefficients(const Density &g) const;

private:
  int degree_;
  Eigen::MatrixXd analysis_;
};

/// Integrates kernel(y) Y_h(y) over the sphere of radius `radius` in polar
/// coordinates about the unit direction `pole`: psi from the supplied rule,
/// `azimuthal_nodes` equispaced angles. Returns a 16 x harmonic_count matrix
/// whose row 4r + c holds entry (r, c) of the kernel moments.
Eigen::MatrixXcd polar_kernel_moments(const Vec3 &pole, double radius, int max_degree,
                                      const QuadratureRule &psi_rule, int azimuthal_nodes,
                                      const std::function<SpinorMatrix(const Vec3 &)> &kernel);

} // namespace dirac_shell
