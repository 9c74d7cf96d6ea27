#include "dirac_shell/boundary_checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dirac_shell/dirac_algebra.hpp"
#include "dirac_shell/parallel.hpp"

namespace dirac_shell {

namespace {

Eigen::MatrixXcd apply_normal(const BoundarySample &s, const Eigen::MatrixXcd &x) {
  Eigen::MatrixXcd y(x.rows(), x.cols());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Eigen::Index r = 4 * static_cast<Eigen::Index>(i);
    y.middleRows<4>(r) = alpha_dot(s.normals[i]) * x.middleRows<4>(r);
  }
  return y;
}

} // namespace

double calderon_defect(const BoundaryOperator &c_sigma, const ResolvedBand &band) {
  const BoundarySample &s = c_sigma.sample();
  const Eigen::MatrixXcd &c = c_sigma.matrix();
  PlainAction defect = [&](const Eigen::MatrixXcd &x) -> Eigen::MatrixXcd {
    Eigen::MatrixXcd y = c * apply_normal(s, x);
    y = c * apply_normal(s, y);
    return y + 0.25 * x;
  };
  return band_norm(s, band, defect);
}

double calderon_defect(const BoundaryOperator &c_sigma) {
  return calderon_defect(c_sigma, resolved_band(c_sigma.sample()));
}

double calderon_defect_full(const BoundaryOperator &c_sigma) {
  const BoundarySample &s = c_sigma.sample();
  const Eigen::MatrixXcd cs = c_sigma.matrix(Convention::Symmetrized);
  // alpha.N is block-diagonal, so it is unchanged by the weight similarity.
  PlainAction forward = [&](const Eigen::MatrixXcd &x) -> Eigen::MatrixXcd {
    Eigen::MatrixXcd y = cs * apply_normal(s, x);
    y = cs * apply_normal(s, y);
    return y + 0.25 * x;
  };
  PlainAction adjoint = [&](const Eigen::MatrixXcd &x) -> Eigen::MatrixXcd {
    Eigen::MatrixXcd y = apply_normal(s, cs.adjoint() * x);
    y = apply_normal(s, cs.adjoint() * y);
    return y + 0.25 * x;
  };
  return full_space_norm(forward, adjoint, cs.rows());
}

BoundaryOperator anticommutator(const BoundaryOperator &a, const BoundaryOperator &b) {
  return a * b + b * a;
}

CompactnessProxy compactness_proxy(const BoundaryOperator &op, const ResolvedBand &band,
                                   double tau_ratio) {
  return compactness_proxy(op.sample(), band, action_of(op), tau_ratio);
}

PlainAction anticommutator_action(const BoundaryOperator &a, const BoundaryOperator &d) {
  if (&a.sample() != &d.sample() && a.nodes() != d.nodes())
    throw std::invalid_argument("anticommutator_action: operators live on different samples");
  const std::size_t n = d.nodes();
  const Eigen::MatrixXcd &dm = d.matrix();
  std::vector<SpinorMatrix> blocks(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Index r = 4 * static_cast<Eigen::Index>(i);
    blocks[i] = dm.block<4, 4>(r, r);
    Eigen::MatrixXcd row = dm.middleRows<4>(r);
    row.middleCols<4>(r).setZero();
    if (!row.isZero(0.0))
      throw std::invalid_argument("anticommutator_action: second operator is not block-diagonal");
  }
  const Eigen::MatrixXcd &am = a.matrix();
  return [blocks = std::move(blocks), &am](const Eigen::MatrixXcd &x) -> Eigen::MatrixXcd {
    auto apply_d = [&](const Eigen::MatrixXcd &v) {
      Eigen::MatrixXcd y(v.rows(), v.cols());
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Eigen::Index r = 4 * static_cast<Eigen::Index>(i);
        y.middleRows<4>(r) = blocks[i] * v.middleRows<4>(r);
      }
      return y;
    };
    Eigen::MatrixXcd out = am * apply_d(x);
    out += apply_d(am * x);
    return out;
  };
}

CompactnessProxy compactness_proxy(const BoundarySample &sample, const ResolvedBand &band,
                                   const PlainAction &action, double tau_ratio) {
  CompactnessProxy out;
  out.singular_values = band_singular_values(sample, band, action);
  out.dimension = out.singular_values.size();
  if (out.dimension == 0)
    return out;
  out.tau = tau_ratio * out.singular_values(0);
  out.count_above = static_cast<Eigen::Index>(
      std::count_if(out.singular_values.begin(), out.singular_values.end(),
                    [&](double s) { return s > out.tau; }));
  return out;
}

bool compactness_stable(const std::vector<CompactnessProxy> &levels, double slack) {
  if (levels.size() < 2)
    throw std::invalid_argument("compactness_stable: need at least two levels");
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (levels[k].dimension <= levels[k - 1].dimension)
      throw std::invalid_argument("compactness_stable: dimensions must grow");
    if (static_cast<double>(levels[k].count_above) >
        (1.0 + slack) * static_cast<double>(levels[k - 1].count_above))
      return false;
  }
  return true;
}

MagneticSupResult magnetic_sup(const BoundarySample &sample, const std::vector<double> &lambda,
                               MassParameter m) {
  if (lambda.size() != sample.size())
    throw std::invalid_argument("magnetic_sup: lambda has wrong node count");
  const std::size_t n = sample.size();
  std::vector<MagneticSupResult> rows(n);
  parallel_for(n, [&](std::size_t i) {
    const WeightedSurfacePoint x{sample.nodes[i], sample.normals[i], lambda[i]};
    MagneticSupResult best{0.0, i, i};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i)
        continue;
      const WeightedSurfacePoint z{sample.nodes[j], sample.normals[j], lambda[j]};
      const double v = (x.position - z.position).norm() * spectral_norm(magnetic_kernel(x, z, m));
      if (v > best.sup)
        best = {v, i, j};
    }
    rows[i] = best;
  });
  MagneticSupResult out;
  for (const auto &r : rows)
    if (r.sup > out.sup)
      out = r;
  return out;
}

BoundaryOperator inverse_lambda_normal(SampleHandle sample, const std::vector<double> &lambda) {
  if (lambda.size() != sample->size())
    throw std::invalid_argument("inverse_lambda_normal: lambda has wrong node count");
  for (double v : lambda)
    if (v == 0.0 || !std::isfinite(v))
      throw DomainError("inverse_lambda_normal: lambda must be finite and nonzero");
  const auto &normals = sample->normals;
  return BoundaryOperator::block_diagonal(
      sample, [&](std::size_t i) { return SpinorMatrix(alpha_dot(normals[i]) / lambda[i]); });
}

} // namespace dirac_shell
