#include <doctest.h>

#include <sstream>

#include "dirac_shell/geometry.hpp"
#include "dirac_shell/quadrature.hpp"
#include "dirac_shell/spherical_harmonics.hpp"

using namespace dirac_shell;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const QuadratureRule r = gauss_legendre(5, 0.0, 2.0);
  double s = 0;
  for (std::size_t k = 0; k < r.nodes.size(); ++k)
    s += r.weights[k] * std::pow(r.nodes[k], 9);
  CHECK(s == doctest::Approx(102.4).epsilon(1e-14));
  CHECK(std::is_sorted(r.nodes.begin(), r.nodes.end()));
}

TEST_CASE("Richardson weights reproduce polynomials at zero") {
  const std::vector<double> h{0.4, 0.2, 0.1};
  const auto w = richardson_weights(h);
  double v = 0;
  for (std::size_t k = 0; k < h.size(); ++k)
    v += w[k] * (3.0 + 2.0 * h[k] - h[k] * h[k]);
  CHECK(v == doctest::Approx(3.0).epsilon(1e-14));
  const std::vector<double> vals{3.0 + 0.8, 3.0 + 0.4, 3.0 + 0.2};
  const auto table = neville_table(h, vals);
  CHECK(table.back().back() == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("sphere sample weights and normals") {
  const BoundarySample s = sphere_sample(2, 2.0);
  CHECK(s.size() == static_cast<std::size_t>(sphere_colatitudes(2) * sphere_longitudes(2)));
  CHECK(s.total_weight() == doctest::Approx(16.0 * kPi).epsilon(1e-13));
  CHECK(s.normal_moment().norm() < 1e-12);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s.normals[i].norm() == doctest::Approx(1.0));
    CHECK((s.nodes[i] - 2.0 * s.normals[i]).norm() < 1e-14);
  }
  CHECK(s.descriptor.max_degree() == sphere_colatitudes(2) - 1);
}

TEST_CASE("real spherical harmonics are orthonormal on the grid") {
  const BoundarySample s = sphere_sample(1);
  const int deg = 3;
  std::vector<double> y(harmonic_count(deg));
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(harmonic_count(deg), harmonic_count(deg));
  for (std::size_t i = 0; i < s.size(); ++i) {
    real_spherical_harmonics(deg, s.nodes[i], y);
    Eigen::Map<Eigen::VectorXd> v(y.data(), harmonic_count(deg));
    gram += s.weights[i] * v * v.transpose();
  }
  CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(harmonic_index(1, 0) == 2);
}

TEST_CASE("OFF parsing and validation") {
  const TriangulatedSurface oct = octahedron();
  CHECK(oct.euler_characteristic() == 2);
  std::stringstream ss;
  write_off(ss, oct);
  TriangulatedSurface back = parse_off(ss);
  CHECK(back.triangles.size() == 8);
  CHECK(back.area() == doctest::Approx(4.0 * std::sqrt(3.0)));

  const BoundarySample m = mesh_sample(icosphere(2));
  CHECK(m.normal_moment().norm() < 1e-12);
  for (std::size_t i = 0; i < m.size(); ++i)
    CHECK(m.normals[i].dot(m.nodes[i]) > 0);

  std::stringstream open("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  CHECK_THROWS(parse_off(open));
  std::stringstream bad("OFF\n3 1 0\n0 0 0\n1 0 0\n");
  CHECK_THROWS(parse_off(bad));
  std::stringstream header("PLY\n");
  CHECK_THROWS(parse_off(header));
}
