#include "dirac_shell/kernels.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "dirac_shell/dirac_algebra.hpp"

namespace dirac_shell {

MassParameter::MassParameter(double m) : m_(m) {
  if (!(m > 0.0) || !std::isfinite(m))
    throw DomainError("mass must be a positive finite number, got " + std::to_string(m));
}

SpinorMatrix phi_eval(const Vec3 &x, MassParameter mass) {
  const double r = x.norm();
  if (r == 0.0)
    throw DomainError("phi_eval: the fundamental solution is singular at x = 0");
  const double m = mass.value();
  const double pref = std::exp(-m * r) / (4.0 * kPi * r);
  SpinorMatrix out = (pref * m) * dirac_beta();
  out += (kI * (pref * (1.0 + m * r) / (r * r))) * alpha_dot(x);
  return out;
}

SpinorMatrix magnetic_kernel(const WeightedSurfacePoint &x, const WeightedSurfacePoint &z,
                             MassParameter mass) {
  if (x.lambda == 0.0 || z.lambda == 0.0)
    throw DomainError("magnetic_kernel: lambda vanishes at a kernel point");
  const Vec3 d = x.position - z.position;
  const double r = d.norm();
  if (r == 0.0)
    throw DomainError("magnetic_kernel: coincident points");
  const double m = mass.value();
  const Vec3 nx = x.normal / x.lambda;
  const Vec3 nz = z.normal / z.lambda;
  SpinorMatrix k = phi_eval(d, mass) * alpha_dot(Vec3(nz - nx));
  const double scal = std::exp(-m * r) / (2.0 * kPi * r * r * r) * (1.0 + m * r) * nx.dot(d);
  k += (kI * scal) * SpinorMatrix::Identity();
  return k;
}

double spectral_norm(const SpinorMatrix &a) {
  Eigen::SelfAdjointEigenSolver<SpinorMatrix> es(a.adjoint() * a, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

} // namespace dirac_shell
