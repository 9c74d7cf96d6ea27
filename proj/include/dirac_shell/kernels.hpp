#pragma once

#include "dirac_shell/types.hpp"

namespace dirac_shell {

/// Mass m > 0 of the free Dirac operator (inverse length).
class MassParameter {
public:
  explicit MassParameter(double m);
  double value() const { return m_; }

private:
  double m_;
};

/// Fundamental solution of H = -i alpha.grad + m beta:
///   phi(x) = e^{-m|x|}/(4 pi |x|) (m beta + (1 + m|x|) i alpha.x / |x|^2).
/// Throws DomainError at x = 0.
SpinorMatrix phi_eval(const Vec3 &x, MassParameter m);

/// A surface point together with its unit normal and the value of a scalar
/// coupling lambda there.
struct WeightedSurfacePoint {
  Vec3 position;
  Vec3 normal;
  double lambda;
};

/// Kernel of the anticommutator {(1/lambda)(alpha.N), C_sigma}:
///   K(x,z) = phi(x-z) alpha.(N(z)/lambda(z) - N(x)/lambda(x))
///          + i e^{-m r}/(2 pi r^3) (1 + m r) (N(x)/lambda(x) . (x - z)) I,   r = |x - z|.
/// Throws DomainError when x = z or lambda vanishes at either point.
SpinorMatrix magnetic_kernel(const WeightedSurfacePoint &x, const WeightedSurfacePoint &z,
                             MassParameter m);

/// Largest singular value of a 4x4 matrix.
double spectral_norm(const SpinorMatrix &a);

} // namespace dirac_shell
