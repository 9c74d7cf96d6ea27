#pragma once

#include <vector>

#include "dirac_shell/boundary_operator.hpp"
#include "dirac_shell/kernels.hpp"

namespace dirac_shell {

/// || (C M_N)^2 + I/4 || on the band, M_N the block-diagonal alpha.N(x_i).
/// Vanishes for the continuum operator.
double calderon_defect(const BoundaryOperator &c_sigma, const ResolvedBand &band);
/// Same, measured on the sample's own resolved band.
double calderon_defect(const BoundaryOperator &c_sigma);
/// Same operator measured over the whole discrete space (power iteration,
/// symmetrized coordinates). Includes grid modes beyond the resolved band.
double calderon_defect_full(const BoundaryOperator &c_sigma);

/// Blockwise {A, B} = AB + BA.
BoundaryOperator anticommutator(const BoundaryOperator &a, const BoundaryOperator &b);

struct CompactnessProxy {
  Eigen::VectorXd singular_values; ///< descending, band-restricted
  double tau = 0.0;                ///< threshold ratio * s_1
  Eigen::Index count_above = 0;
  Eigen::Index dimension = 0;
};

/// Singular-value profile of an operator on the band; counts values above
/// tau_ratio * s_1.
CompactnessProxy compactness_proxy(const BoundarySample &sample, const ResolvedBand &band,
                                   const PlainAction &action, double tau_ratio = 0.1);
CompactnessProxy compactness_proxy(const BoundaryOperator &op, const ResolvedBand &band,
                                   double tau_ratio = 0.1);

/// Action of {A, D} for dense A and block-diagonal D without forming the product.
/// Throws std::invalid_argument when D has off-diagonal blocks.
PlainAction anticommutator_action(const BoundaryOperator &a, const BoundaryOperator &d);

/// Counts from successive refinements pass when no count exceeds the previous one
/// by more than the slack fraction. Throws std::invalid_argument for fewer than two
/// levels or when the dimension does not grow.
bool compactness_stable(const std::vector<CompactnessProxy> &levels, double slack = 0.1);

/// Scalar coupling sampled at the nodes of a sample.
struct MagneticSupResult {
  double sup = 0.0; ///< max over node pairs of |x - z| ||K(x, z)||
  std::size_t argmax_x = 0;
  std::size_t argmax_z = 0;
};

MagneticSupResult magnetic_sup(const BoundarySample &sample, const std::vector<double> &lambda,
                               MassParameter m);

/// Block-diagonal multiplication by (1/lambda_i) alpha.N(x_i). Throws DomainError
/// when some lambda_i vanishes.
BoundaryOperator inverse_lambda_normal(SampleHandle sample, const std::vector<double> &lambda);

} // namespace dirac_shell
