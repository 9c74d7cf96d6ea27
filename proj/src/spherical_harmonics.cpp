#include "dirac_shell/spherical_harmonics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dirac_shell {

void real_spherical_harmonics(int max_degree, const Vec3 &unit, std::span<double> out) {
  if (max_degree < 0)
    throw std::invalid_argument("real_spherical_harmonics: negative degree");
  if (out.size() < static_cast<std::size_t>(harmonic_count(max_degree)))
    throw std::invalid_argument("real_spherical_harmonics: output too small");

  const double x = unit(0), y = unit(1), z = unit(2);
  const int L = max_degree;

  // Normalised associated Legendre functions with the sin^m(theta) factor removed;
  // the azimuthal part comes from (x + i y)^m = sin^m(theta) e^{i m phi}.
  std::vector<double> pmm(L + 1);
  pmm[0] = 1.0 / std::sqrt(4.0 * kPi);
  for (int m = 1; m <= L; ++m)
    pmm[m] = std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * pmm[m - 1];

  const double sqrt2 = std::sqrt(2.0);
  Complex xy_pow{1.0, 0.0};
  const Complex xy{x, y};
  for (int m = 0; m <= L; ++m) {
    double p_prev2 = 0.0;
    double p_prev = pmm[m];
    const double c = xy_pow.real();
    const double s = xy_pow.imag();
    auto store = [&](int l, double p) {
      if (m == 0) {
        out[harmonic_index(l, 0)] = p;
      } else {
        out[harmonic_index(l, m)] = sqrt2 * p * c;
        out[harmonic_index(l, -m)] = sqrt2 * p * s;
      }
    };
    store(m, p_prev);
    for (int l = m + 1; l <= L; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l) * l - double(m) * m));
      double p;
      if (l == m + 1) {
        p = a * z * p_prev;
      } else {
        const double b = std::sqrt((double(l - 1) * (l - 1) - double(m) * m) /
                                   (4.0 * double(l - 1) * (l - 1) - 1.0));
        p = a * (z * p_prev - b * p_prev2);
      }
      store(l, p);
      p_prev2 = p_prev;
      p_prev = p;
    }
    xy_pow *= xy;
  }
}

} // namespace dirac_shell
