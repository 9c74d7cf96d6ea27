#include "dirac_shell/layer_potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dirac_shell/assembly.hpp"
#include "dirac_shell/dirac_algebra.hpp"
#include "dirac_shell/quadrature.hpp"
#include "dirac_shell/spherical_harmonics.hpp"

namespace dirac_shell {

namespace {

// Composite Gauss-Legendre in psi on [0, pi] with panels graded geometrically
// toward psi = 0 at scale `scale` and no wider than `max_width`.
QuadratureRule graded_psi_rule(double scale, double max_width, int points_per_panel) {
  std::vector<double> breaks{0.0};
  double edge = std::max(scale, 1e-14) / 4.0;
  while (edge < kPi) {
    breaks.push_back(edge);
    edge *= 2.0;
  }
  breaks.push_back(kPi);
  QuadratureRule out;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], b = breaks[p + 1];
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
    for (int q = 0; q < pieces; ++q) {
      const double lo = a + (b - a) * q / pieces;
      const double hi = a + (b - a) * (q + 1) / pieces;
      const QuadratureRule r = gauss_legendre(points_per_panel, lo, hi);
      out.nodes.insert(out.nodes.end(), r.nodes.begin(), r.nodes.end());
      out.weights.insert(out.weights.end(), r.weights.begin(), r.weights.end());
    }
  }
  return out;
}

double nearest_node_distance(const BoundarySample &s, const Vec3 &y) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec3 &x : s.nodes)
    best = std::min(best, (x - y).norm());
  return best;
}

} // namespace

LayerValue single_layer_eval(const BoundarySample &sample, const Density &g, const Vec3 &y,
                             MassParameter m) {
  if (g.nodes() != sample.size())
    throw std::invalid_argument("single_layer_eval: density has wrong node count");
  LayerValue out;
  out.distance = nearest_node_distance(sample, y);
  out.near_surface = out.distance < sample.node_spacing();
  out.value.setZero();
  if (g.flat().isZero(0.0))
    return out;

  const SurfaceDescriptor &d = sample.descriptor;
  if (d.kind == SurfaceKind::Sphere && y.norm() > 0.0) {
    const double radius = d.radius;
    if (std::abs(y.norm() - radius) == 0.0)
      throw DomainError("single_layer_eval: point lies on the surface");
    const SphereInterpolator interp(sample);
    const Eigen::MatrixXcd coef = interp.coefficients(g); // nh x 4
    const int L = interp.max_degree();
    const double scale = std::abs(y.norm() - radius) / radius;
    const QuadratureRule psi = graded_psi_rule(scale, 2.0 / (L + 4), 16);
    int azimuthal = L + 4;
    azimuthal += azimuthal % 2;
    const Eigen::MatrixXcd moments = polar_kernel_moments(
        y.normalized(), radius, L, psi, azimuthal,
        [&](const Vec3 &z) { return phi_eval(y - z, m); });
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        out.value(r) += (moments.row(4 * r + c) * coef.col(c))(0, 0);
    return out;
  }
  for (std::size_t j = 0; j < sample.size(); ++j)
    out.value += sample.weights[j] * phi_eval(y - sample.nodes[j], m) * g.at(j);
  return out;
}

JumpReport jump_check(const BoundaryOperator &c_sigma, const Density &g, std::size_t node,
                      const std::vector<double> &deltas, MassParameter m) {
  const BoundarySample &s = c_sigma.sample();
  if (node >= s.size())
    throw std::out_of_range("jump_check: node index out of range");
  if (deltas.empty())
    throw std::invalid_argument("jump_check: need at least one delta");
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    if (!(deltas[k] > 0.0))
      throw std::invalid_argument("jump_check: deltas must be positive");
    if (k > 0 && !(deltas[k] < deltas[k - 1]))
      throw std::invalid_argument("jump_check: deltas must be strictly decreasing");
  }

  JumpReport rep;
  rep.node = node;
  rep.deltas = deltas;
  const Vec3 x = s.nodes[node];
  const Vec3 n = s.normals[node];
  const SpinorMatrix an = alpha_dot(n);
  const SpinorVector gi = g.at(node);
  rep.expected_jump = -kI * (an * gi);
  rep.c_sigma_g = c_sigma.apply(g).at(node);

  double scale = 0.0;
  for (std::size_t j = 0; j < g.nodes(); ++j)
    scale = std::max(scale, g.at(j).norm());
  const double denom = scale > 0.0 ? scale : 1.0;

  const std::vector<double> w = richardson_weights(deltas);
  rep.phi_plus.setZero();
  rep.phi_minus.setZero();
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    const SpinorVector inside = single_layer_eval(s, g, x - deltas[k] * n, m).value;
    const SpinorVector outside = single_layer_eval(s, g, x + deltas[k] * n, m).value;
    rep.phi_plus += w[k] * inside;
    rep.phi_minus += w[k] * outside;
    rep.raw_jump_defects.push_back((inside - outside - rep.expected_jump).norm() / denom);
  }
  const SpinorVector half_jump = (0.5 * kI) * (an * gi);
  rep.plus_defect = (rep.phi_plus - (rep.c_sigma_g - half_jump)).norm() / denom;
  rep.minus_defect = (rep.phi_minus - (rep.c_sigma_g + half_jump)).norm() / denom;
  rep.jump_defect = (rep.phi_plus - rep.phi_minus - rep.expected_jump).norm() / denom;
  rep.average_defect = (0.5 * (rep.phi_plus + rep.phi_minus) - rep.c_sigma_g).norm() / denom;
  return rep;
}

} // namespace dirac_shell
