#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dirac_shell {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

/// 4x4 complex matrix: the arena for alpha_j, beta, alpha.v and pointwise kernel values.
using SpinorMatrix = Eigen::Matrix<Complex, 4, 4>;
/// Value of a C^4-valued field at a point.
using SpinorVector = Eigen::Matrix<Complex, 4, 1>;
using PauliMatrix = Eigen::Matrix<Complex, 2, 2>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Raised when an argument lies outside the domain where an operation is defined
/// (singular point, excluded parameter curve, vanishing coupling, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed input files or configuration.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace dirac_shell
