#pragma once

#include <span>
#include <vector>

namespace dirac_shell {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with n points on [a, b]. Nodes ascending.
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// Weights c_k such that sum_k c_k f(h_k) is the value at h = 0 of the polynomial
/// interpolating (h_k, f(h_k)). Applied to the punctured-integral sequence this is
/// Richardson extrapolation with an arbitrary step sequence. The h_k must be distinct.
std::vector<double> richardson_weights(std::span<const double> steps);

/// Neville tableau for extrapolation of a scalar sequence to h = 0.
/// row k holds the estimates that use samples 0..k; the last entry of the last row
/// is the fully extrapolated value.
std::vector<std::vector<double>> neville_table(std::span<const double> steps,
                                               std::span<const double> values);

} // namespace dirac_shell
