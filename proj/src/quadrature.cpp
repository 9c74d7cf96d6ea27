#include "dirac_shell/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "dirac_shell/types.hpp"

namespace dirac_shell {

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1)
    throw std::invalid_argument("gauss_legendre: need at least one node");
  QuadratureRule rule;
  if (n == 1) {
    rule.nodes = {0.5 * (a + b)};
    rule.weights = {b - a};
    return rule;
  }
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton on P_n starting from the Chebyshev-like guess.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16)
        break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  if (n % 2 == 1)
    rule.nodes[n / 2] = mid;
  return rule;
}

std::vector<double> richardson_weights(std::span<const double> steps) {
  const std::size_t n = steps.size();
  if (n == 0)
    throw std::invalid_argument("richardson_weights: empty step sequence");
  std::vector<double> c(n, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k)
        continue;
      const double denom = steps[k] - steps[j];
      if (denom == 0.0)
        throw std::invalid_argument("richardson_weights: repeated step");
      // Lagrange basis evaluated at 0
      c[k] *= (0.0 - steps[j]) / denom;
    }
  }
  return c;
}

std::vector<std::vector<double>> neville_table(std::span<const double> steps,
                                               std::span<const double> values) {
  if (steps.size() != values.size() || steps.empty())
    throw std::invalid_argument("neville_table: size mismatch");
  const std::size_t n = steps.size();
  std::vector<std::vector<double>> table(n);
  for (std::size_t k = 0; k < n; ++k) {
    table[k].resize(k + 1);
    table[k][0] = values[k];
    for (std::size_t j = 1; j <= k; ++j) {
      const double hk = steps[k];
      const double hkj = steps[k - j];
      table[k][j] = (hkj * table[k][j - 1] - hk * table[k - 1][j - 1]) / (hkj - hk);
    }
  }
  return table;
}

} // namespace dirac_shell
