#pragma once

#include <vector>

#include "dirac_shell/boundary_operator.hpp"
#include "dirac_shell/kernels.hpp"

namespace dirac_shell {

struct LayerValue {
  SpinorVector value;
  /// Distance from the evaluation point to the nearest node.
  double distance = 0.0;
  /// Set when the point is within one node spacing of the surface. The plain
  /// node-sum rule used on meshes loses accuracy there; the sphere evaluator
  /// refines its polar rule instead.
  bool near_surface = false;
};

/// Single-layer potential (phi * g sigma)(y) = int phi(y - z) g(z) dsigma(z) at an
/// off-surface point. Sphere samples interpolate g spectrally and integrate in
/// polar coordinates graded toward the foot point; other samples use the node sum.
LayerValue single_layer_eval(const BoundarySample &sample, const Density &g, const Vec3 &y,
                             MassParameter m);

struct JumpReport {
  std::size_t node = 0;
  std::vector<double> deltas;
  /// Extrapolated limits from inside (Omega_+) and outside (Omega_-).
  SpinorVector phi_plus;
  SpinorVector phi_minus;
  SpinorVector c_sigma_g;         ///< (C g)(x_i) from the assembled operator
  SpinorVector expected_jump;     ///< -i (alpha.N) g(x_i)
  double plus_defect = 0.0;       ///< vs (-(i/2) alpha.N + C) g
  double minus_defect = 0.0;      ///< vs (+(i/2) alpha.N + C) g
  double jump_defect = 0.0;       ///< (phi_+ - phi_-) vs -i (alpha.N) g
  double average_defect = 0.0;    ///< (phi_+ + phi_-)/2 vs C g
  /// |phi_+(delta) - phi_-(delta) - expected| per delta before extrapolation.
  std::vector<double> raw_jump_defects;
};

/// Approaches node i along the normal from both sides at the given distances,
/// extrapolates delta -> 0 and compares with the jump relations. Defects are
/// relative to max_j |g(x_j)| (absolute when g vanishes identically).
/// Throws std::invalid_argument unless deltas are positive and strictly decreasing.
JumpReport jump_check(const BoundaryOperator &c_sigma, const Density &g, std::size_t node,
                      const std::vector<double> &deltas, MassParameter m);

} // namespace dirac_shell
