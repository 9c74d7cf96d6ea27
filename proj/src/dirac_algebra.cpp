#include "dirac_shell/dirac_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dirac_shell {

PauliMatrix pauli(int j) {
  PauliMatrix s = PauliMatrix::Zero();
  switch (j) {
  case 1:
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
    break;
  case 2:
    s(0, 1) = -kI;
    s(1, 0) = kI;
    break;
  case 3:
    s(0, 0) = 1.0;
    s(1, 1) = -1.0;
    break;
  default:
    throw std::out_of_range("pauli: index must be 1, 2 or 3, got " + std::to_string(j));
  }
  return s;
}

SpinorMatrix dirac_alpha(int j) {
  if (j < 1 || j > 3)
    throw std::out_of_range("dirac_alpha: index must be 1, 2 or 3, got " + std::to_string(j));
  SpinorMatrix a = SpinorMatrix::Zero();
  const PauliMatrix s = pauli(j);
  a.topRightCorner<2, 2>() = s;
  a.bottomLeftCorner<2, 2>() = s;
  return a;
}

SpinorMatrix dirac_beta() {
  SpinorMatrix b = SpinorMatrix::Zero();
  b(0, 0) = 1.0;
  b(1, 1) = 1.0;
  b(2, 2) = -1.0;
  b(3, 3) = -1.0;
  return b;
}

SpinorMatrix alpha_dot(const CVec3 &v) {
  // Built from the blocks directly: sigma.v = (v3, v1 - i v2; v1 + i v2, -v3).
  PauliMatrix s;
  s(0, 0) = v(2);
  s(0, 1) = v(0) - kI * v(1);
  s(1, 0) = v(0) + kI * v(1);
  s(1, 1) = -v(2);
  SpinorMatrix a = SpinorMatrix::Zero();
  a.topRightCorner<2, 2>() = s;
  a.bottomLeftCorner<2, 2>() = s;
  return a;
}

SpinorMatrix alpha_dot(const Vec3 &v) { return alpha_dot(CVec3(v.cast<Complex>())); }

double max_abs_entry(const SpinorMatrix &a) { return a.cwiseAbs().maxCoeff(); }

SpinorMatrix spin_rotation_z(double angle) {
  const Complex em = std::polar(1.0, -0.5 * angle);
  const Complex ep = std::polar(1.0, 0.5 * angle);
  SpinorMatrix u = SpinorMatrix::Zero();
  u(0, 0) = em;
  u(1, 1) = ep;
  u(2, 2) = em;
  u(3, 3) = ep;
  return u;
}

} // namespace dirac_shell
