#include "dirac_shell/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dirac_shell/dirac_algebra.hpp"
#include "dirac_shell/parallel.hpp"
#include "dirac_shell/spherical_harmonics.hpp"

namespace dirac_shell {

SphereInterpolator::SphereInterpolator(const BoundarySample &sample)
    : degree_(sample.descriptor.max_degree()) {
  if (sample.descriptor.kind != SurfaceKind::Sphere)
    throw DomainError("SphereInterpolator: sample is not a sphere grid");
  const int nh = dirac_shell::harmonic_count(degree_);
  const double r2 = sample.descriptor.radius * sample.descriptor.radius;
  analysis_.resize(nh, static_cast<Eigen::Index>(sample.size()));
  std::vector<double> y(nh);
  for (std::size_t j = 0; j < sample.size(); ++j) {
    real_spherical_harmonics(degree_, sample.normals[j], y);
    for (int h = 0; h < nh; ++h)
      analysis_(h, static_cast<Eigen::Index>(j)) = y[h] * sample.weights[j] / r2;
  }
}

Eigen::MatrixXcd SphereInterpolator::coefficients(const Density &g) const {
  const Eigen::Index n = analysis_.cols();
  if (static_cast<Eigen::Index>(g.nodes()) != n)
    throw std::invalid_argument("SphereInterpolator: density has wrong node count");
  // node values as N x 4
  Eigen::MatrixXcd values(n, 4);
  for (Eigen::Index j = 0; j < n; ++j)
    values.row(j) = g.flat().segment<4>(4 * j).transpose();
  return analysis_.cast<Complex>() * values;
}

Eigen::MatrixXcd polar_kernel_moments(const Vec3 &pole, double radius, int max_degree,
                                      const QuadratureRule &psi_rule, int azimuthal_nodes,
                                      const std::function<SpinorMatrix(const Vec3 &)> &kernel) {
  const int nh = harmonic_count(max_degree);
  // Orthonormal frame (e1, e2) perpendicular to the pole.
  const Vec3 p = pole.normalized();
  Vec3 helper = std::abs(p(2)) < 0.9 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
  const Vec3 e1 = (helper - helper.dot(p) * p).normalized();
  const Vec3 e2 = p.cross(e1);

  Eigen::MatrixXcd moments = Eigen::MatrixXcd::Zero(16, nh);
  Eigen::Matrix<Complex, 16, 1> kvec;
  std::vector<double> y(nh);
  Eigen::Map<const Eigen::RowVectorXd> yrow(y.data(), nh);
  const double dchi = 2.0 * kPi / azimuthal_nodes;
  for (std::size_t a = 0; a < psi_rule.nodes.size(); ++a) {
    const double psi = psi_rule.nodes[a];
    const double sp = std::sin(psi), cp = std::cos(psi);
    const double w_psi = psi_rule.weights[a] * radius * radius * sp * dchi;
    for (int b = 0; b < azimuthal_nodes; ++b) {
      const double chi = dchi * b;
      const Vec3 dir = cp * p + sp * (std::cos(chi) * e1 + std::sin(chi) * e2);
      const SpinorMatrix k = kernel(radius * dir);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          kvec(4 * r + c) = w_psi * k(r, c);
      real_spherical_harmonics(max_degree, dir, y);
      moments.noalias() += kvec * yrow.cast<Complex>();
    }
  }
  return moments;
}

std::vector<double> default_cap_radii(const BoundarySample &sample, PVScheme scheme) {
  if (scheme == PVScheme::PolarSpectral) {
    const double h = kPi * sample.descriptor.radius / sample.descriptor.n_colatitude;
    return {h / 4, h / 8, h / 16, h / 32, h / 64};
  }
  const double s = sample.node_spacing();
  return {4 * s, 3 * s, 2 * s};
}

namespace {

PVScheme resolve_scheme(const BoundarySample &s, PVScheme scheme) {
  if (scheme == PVScheme::Auto)
    return s.descriptor.kind == SurfaceKind::Sphere ? PVScheme::PolarSpectral
                                                    : PVScheme::NodePuncture;
  return scheme;
}

double node_distance(const BoundarySample &s, std::size_t i, std::size_t j) {
  if (s.descriptor.kind == SurfaceKind::Sphere) {
    const double c = std::clamp(s.normals[i].dot(s.normals[j]), -1.0, 1.0);
    return s.descriptor.radius * std::acos(c);
  }
  return (s.nodes[i] - s.nodes[j]).norm();
}

AssemblyResult assemble_node_puncture(SampleHandle handle, MassParameter m,
                                      std::vector<double> radii) {
  const BoundarySample &s = *handle;
  const double spacing = s.node_spacing();
  for (double r : radii)
    if (r < spacing)
      throw DomainError("assemble_C: cap radius " + std::to_string(r) +
                        " is below the node spacing " + std::to_string(spacing) +
                        "; extrapolation would be ill-posed");
  const std::vector<double> c = richardson_weights(radii);
  const std::size_t n = s.size();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4 * n, 4 * n);
  // first-row punctured sums for the extrapolation table
  std::vector<Eigen::MatrixXcd> row0(radii.size(), Eigen::MatrixXcd::Zero(4, 4 * n));
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i)
        continue;
      const double d = node_distance(s, i, j);
      double coef = 0.0;
      for (std::size_t k = 0; k < radii.size(); ++k)
        if (d > radii[k]) {
          coef += c[k];
          if (i == 0)
            row0[k].block<4, 4>(0, 4 * j) = s.weights[j] * phi_eval(s.nodes[i] - s.nodes[j], m);
        }
      if (coef != 0.0)
        a.block<4, 4>(4 * i, 4 * j) = (coef * s.weights[j]) * phi_eval(s.nodes[i] - s.nodes[j], m);
    }
  });
  AssemblyResult out{BoundaryOperator(std::move(handle), std::move(a)), PVScheme::NodePuncture, {}};
  const Eigen::MatrixXcd limit = out.op.matrix().topRows(4);
  for (std::size_t k = 0; k < radii.size(); ++k)
    out.extrapolation_table.push_back(
        {radii[k], (row0[k] - limit).norm() / std::max(limit.norm(), 1e-300)});
  return out;
}

AssemblyResult assemble_polar_spectral(SampleHandle handle, MassParameter m,
                                       std::vector<double> radii, int radial, int azimuthal) {
  const BoundarySample &s = *handle;
  const SurfaceDescriptor &d = s.descriptor;
  if (d.kind != SurfaceKind::Sphere)
    throw DomainError("assemble_C: the polar spectral scheme needs a sphere sample");
  const double radius = d.radius;
  for (double r : radii)
    if (!(r > 0.0) || r >= kPi * radius)
      throw DomainError("assemble_C: cap radius must lie in (0, pi R)");
  const int L = d.max_degree();
  if (radial <= 0)
    radial = L + 16;
  if (azimuthal <= 0)
    azimuthal = L + 4;
  if (azimuthal % 2)
    ++azimuthal;
  const std::vector<double> c = richardson_weights(radii);
  const SphereInterpolator interp(s);
  const Eigen::MatrixXcd analysis = interp.analysis().cast<Complex>();
  const int nt = d.n_colatitude, np = d.n_longitude;
  const std::size_t n = s.size();

  // Rows for targets on the zero meridian; the rest follow from rotational
  // equivariance about the z axis.
  std::vector<Eigen::MatrixXcd> meridian(nt);
  std::vector<Eigen::MatrixXcd> first_partials;
  parallel_for(static_cast<std::size_t>(nt), [&](std::size_t it) {
    const std::size_t node = it * np;
    const Vec3 x0 = s.nodes[node];
    const Vec3 pole = s.normals[node];
    auto kernel = [&](const Vec3 &y) { return phi_eval(x0 - y, m); };
    Eigen::MatrixXcd moments = Eigen::MatrixXcd::Zero(16, harmonic_count(L));
    std::vector<Eigen::MatrixXcd> partials;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      const QuadratureRule rule = gauss_legendre(radial, radii[k] / radius, kPi);
      Eigen::MatrixXcd mk = polar_kernel_moments(pole, radius, L, rule, azimuthal, kernel);
      moments += c[k] * mk;
      if (it == 0)
        partials.push_back(std::move(mk));
    }
    meridian[it] = moments * analysis; // 16 x N
    if (it == 0) {
      for (auto &p : partials)
        p = p * analysis;
      first_partials = std::move(partials);
    }
  });

  Eigen::MatrixXcd a(4 * n, 4 * n);
  const double dphi = 2.0 * kPi / np;
  parallel_for(n, [&](std::size_t target) {
    const int it = static_cast<int>(target) / np;
    const int kt = static_cast<int>(target) % np;
    const SpinorMatrix u = spin_rotation_z(dphi * kt);
    const SpinorMatrix ua = u.adjoint();
    const Eigen::MatrixXcd &row = meridian[it];
    for (int jt = 0; jt < nt; ++jt)
      for (int l = 0; l < np; ++l) {
        const int shifted = jt * np + ((l - kt) % np + np) % np;
        SpinorMatrix b;
        for (int r = 0; r < 4; ++r)
          for (int cc = 0; cc < 4; ++cc)
            b(r, cc) = row(4 * r + cc, shifted);
        a.block<4, 4>(4 * target, 4 * (jt * np + l)) = u * b * ua;
      }
  });

  AssemblyResult out{BoundaryOperator(std::move(handle), std::move(a)), PVScheme::PolarSpectral,
                     {}};
  const Eigen::MatrixXcd &limit = meridian[0];
  for (std::size_t k = 0; k < radii.size(); ++k)
    out.extrapolation_table.push_back(
        {radii[k], (first_partials[k] - limit).norm() / std::max(limit.norm(), 1e-300)});
  return out;
}

} // namespace

AssemblyResult assemble_C_detailed(SampleHandle sample, MassParameter m, const PVStrategy &pv) {
  if (!sample)
    throw std::invalid_argument("assemble_C: null sample");
  if (sample->size() < 2)
    throw DomainError("assemble_C: principal-value extrapolation needs at least two nodes");
  const PVScheme scheme = resolve_scheme(*sample, pv.scheme);
  std::vector<double> radii = pv.cap_radii.empty() ? default_cap_radii(*sample, scheme)
                                                   : pv.cap_radii;
  std::sort(radii.begin(), radii.end(), std::greater<>());
  if (std::adjacent_find(radii.begin(), radii.end()) != radii.end())
    throw DomainError("assemble_C: cap radii must be distinct");
  if (scheme == PVScheme::NodePuncture)
    return assemble_node_puncture(std::move(sample), m, std::move(radii));
  return assemble_polar_spectral(std::move(sample), m, std::move(radii), pv.radial_nodes,
                                 pv.azimuthal_nodes);
}

BoundaryOperator assemble_C(SampleHandle sample, MassParameter m, const PVStrategy &pv) {
  return assemble_C_detailed(std::move(sample), m, pv).op;
}

} // namespace dirac_shell
