#pragma once

#include <vector>

#include "dirac_shell/boundary_operator.hpp"
#include "dirac_shell/types.hpp"

namespace dirac_shell {

enum class Region { Inside, Outside };

/// Spinor field sampled at points tagged inside or outside the surface. The
/// phase acquired by outside values under U_z is kept as an angle and applied
/// when values are read, so U_z and U_{conj z} compose back to the original exactly.
class PiecewiseField {
public:
  PiecewiseField(std::vector<SpinorVector> values, std::vector<Region> tags,
                 std::vector<double> weights);

  /// Pairs x_i - delta N_i (inside) and x_i + delta N_i (outside) for every node.
  static PiecewiseField straddle(const BoundarySample &sample, double delta,
                                 const std::function<SpinorVector(const Vec3 &)> &f);

  std::size_t size() const { return base_.size(); }
  Region tag(std::size_t k) const { return tags_[k]; }
  SpinorVector value(std::size_t k) const;
  double outside_phase() const { return phase_; }
  /// sqrt(sum_k w_k |value_k|^2).
  double weighted_norm() const;

  friend PiecewiseField u_z_apply(const PiecewiseField &f, double theta);

private:
  std::vector<SpinorVector> base_;
  std::vector<Region> tags_;
  std::vector<double> weights_;
  double phase_ = 0.0; ///< outside values carry e^{i phase}
};

/// U_z with z = e^{i theta}: inside values unchanged, outside values times conj(z).
PiecewiseField u_z_apply(const PiecewiseField &f, double theta);

/// Shell density lambda_n (alpha.N(x_i)) s for a reference spinor s.
Density gauge_eta_gradient(double lambda_n, const BoundarySample &sample,
                           const SpinorVector &reference);
/// sum_i w_i lambda_n N_i x c: discrete curl of the gradient field paired with a constant vector.
Vec3 eta_curl_proxy(double lambda_n, const BoundarySample &sample, const Vec3 &c);

/// (lambda + 2i)(lambda + M - 2i) / ((lambda - 2i)(lambda + M + 2i)).
Complex gauge_rhs(double lambda, double M);

struct GaugeAngle {
  std::vector<double> lambda;
  std::vector<Complex> rhs;
  std::vector<double> theta;
  /// Accumulated 2 pi corrections relative to the principal argument.
  std::vector<long> winding;
  double max_step = 0.0;

  /// max_k |theta_{k+1} - 2 theta_k + theta_{k-1}|.
  double max_second_difference() const;
  /// max_k |e^{i theta_k} - rhs_k|.
  double reconstruction_error() const;
};

/// Continuous branch of arg(rhs) along a path, by sequential unwrapping from the
/// principal value at the first sample. Throws DomainError when M <= 0, when
/// lambda + M <= 0 somewhere, or when a step is within `ambiguity` of pi.
GaugeAngle theta_from_lambda(const std::vector<double> &lambda, double M,
                             double ambiguity = 1e-9);

/// (2i + lambda + M)/(2i - lambda - M): ratio of outside to inside traces.
Complex jump_coefficient(double lambda, double M);

/// (lambda/2 - i) e^{i theta} (2i + lambda + M)/(2i - lambda - M) + (lambda/2 + i), which
/// vanishes identically. Throws DomainError when M <= 0 or lambda + M <= 0.
Complex boundary_coeff_check(double lambda, double M);

} // namespace dirac_shell
