#include <doctest.h>

#include "dirac_shell/assembly.hpp"
#include "dirac_shell/boundary_checks.hpp"
#include "dirac_shell/dirac_algebra.hpp"
#include "dirac_shell/kernels.hpp"
#include "dirac_shell/layer_potential.hpp"

using namespace dirac_shell;

TEST_CASE("fundamental solution at a unit point") {
  const MassParameter m(1.0);
  const SpinorMatrix expect =
      std::exp(-1.0) / (4 * kPi) * (dirac_beta() + Complex(0, 2) * dirac_alpha(1));
  CHECK(max_abs_entry(phi_eval(Vec3(1, 0, 0), m) - expect) < 1e-16);
  CHECK_THROWS_AS(phi_eval(Vec3::Zero(), m), DomainError);
  CHECK_THROWS_AS(MassParameter(0.0), DomainError);
}

TEST_CASE("fundamental solution solves the free equation away from 0") {
  const MassParameter m(1.3);
  const Vec3 x(0.3, 0.4, -0.5);
  const double h = 1e-4;
  SpinorMatrix hphi = m.value() * dirac_beta() * phi_eval(x, m);
  for (int j = 0; j < 3; ++j) {
    Vec3 e = Vec3::Zero();
    e(j) = h;
    hphi += -kI * dirac_alpha(j + 1) * (phi_eval(x + e, m) - phi_eval(x - e, m)) / (2 * h);
  }
  CHECK(max_abs_entry(hphi) < 1e-6);
  CHECK(max_abs_entry(phi_eval(x, m).adjoint() - phi_eval(-x, m)) < 1e-16);
}

TEST_CASE("magnetic kernel errors and decay") {
  const MassParameter m(1.0);
  const WeightedSurfacePoint a{Vec3(0, 0, 1), Vec3(0, 0, 1), 2.0};
  CHECK_THROWS_AS(magnetic_kernel(a, a, m), DomainError);
  WeightedSurfacePoint z{Vec3(0, 0.6, 0.8), Vec3(0, 0.6, 0.8), 0.0};
  CHECK_THROWS_AS(magnetic_kernel(a, z, m), DomainError);
  z.lambda = 2.0;
  const double r = (a.position - z.position).norm();
  CHECK(r * spectral_norm(magnetic_kernel(a, z, m)) < 1.0);
}

TEST_CASE("sphere interpolator is exact for low degree fields") {
  auto s = std::make_shared<const BoundarySample>(sphere_sample(1));
  const SphereInterpolator interp(*s);
  const Density g = Density::from_function(*s, [](const Vec3 &x) {
    return SpinorVector(x(2), 0, 0, 0);
  });
  Eigen::MatrixXcd coef = interp.coefficients(g);
  const double y10 = std::sqrt(3.0 / (4 * kPi));
  CHECK(std::abs(coef(2, 0) - 1.0 / y10) < 1e-13);
  coef(2, 0) = 0;
  CHECK(coef.cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("assembled C: Calderon identity, Hermitian structure, errors") {
  const MassParameter m(1.0);
  auto s1 = std::make_shared<const BoundarySample>(sphere_sample(1));
  auto s2 = std::make_shared<const BoundarySample>(sphere_sample(2));
  const AssemblyResult a1 = assemble_C_detailed(s1, m);
  const AssemblyResult a2 = assemble_C_detailed(s2, m);
  CHECK(a1.scheme == PVScheme::PolarSpectral);
  CHECK_FALSE(a1.extrapolation_table.empty());
  const ResolvedBand b1 = resolved_band(*s1, 3), b2 = resolved_band(*s2, 3);
  const double d1 = calderon_defect(a1.op, b1), d2 = calderon_defect(a2.op, b2);
  CHECK(d1 < 1e-6);
  CHECK(d2 < d1);
  CHECK(hermitian_defect(a1.op, b1) < 1e-12);
  CHECK(calderon_defect(BoundaryOperator::identity(s1), b1) == doctest::Approx(1.25));

  BoundarySample one;
  one.nodes = {Vec3(0, 0, 1)};
  one.normals = {Vec3(0, 0, 1)};
  one.weights = {1.0};
  one.descriptor.kind = SurfaceKind::Mesh;
  CHECK_THROWS_AS(assemble_C(std::make_shared<const BoundarySample>(one), m), DomainError);
  auto mesh = std::make_shared<const BoundarySample>(mesh_sample(octahedron()));
  PVStrategy polar;
  polar.scheme = PVScheme::PolarSpectral;
  CHECK_THROWS_AS(assemble_C(mesh, m, polar), DomainError);
}

TEST_CASE("jump relations on the coarsest sphere") {
  const MassParameter m(1.0);
  auto s = std::make_shared<const BoundarySample>(sphere_sample(1));
  const BoundaryOperator c = assemble_C(s, m);
  const Density g = Density::from_function(*s, [](const Vec3 &x) {
    return SpinorVector(1.0 + x(0), Complex(0, x(1)), 0.5, x(2));
  });
  const double h = s->node_spacing();
  const JumpReport r = jump_check(c, g, 7, {h / 2, h / 4, h / 8, h / 16}, m);
  CHECK(r.jump_defect < 1e-3);
  CHECK(r.average_defect < 1e-3);
  CHECK(r.raw_jump_defects.size() == 4);
  CHECK_THROWS_AS(jump_check(c, g, 7, {h / 4, h / 2}, m), std::invalid_argument);
  CHECK_THROWS_AS(jump_check(c, g, 7, {h, -h}, m), std::invalid_argument);
  const LayerValue zero = single_layer_eval(*s, Density(s->size()), Vec3(0, 0, 1.1), m);
  CHECK(zero.value.norm() == 0.0);
}

TEST_CASE("compactness proxy helpers") {
  const MassParameter m(1.0);
  auto s = std::make_shared<const BoundarySample>(sphere_sample(1));
  const BoundaryOperator c = assemble_C(s, m);
  CHECK_THROWS_AS(anticommutator_action(c, c), std::invalid_argument);
  const std::vector<double> zero_lambda(s->size(), 0.0);
  CHECK_THROWS_AS(inverse_lambda_normal(s, zero_lambda), DomainError);

  const BoundaryOperator n = BoundaryOperator::normal_multiplier(s);
  const ResolvedBand band = resolved_band(*s);
  const CompactnessProxy matrix_free = compactness_proxy(*s, band, anticommutator_action(c, n));
  const CompactnessProxy dense = compactness_proxy(anticommutator(c, n), band);
  CHECK(matrix_free.count_above == dense.count_above);
  CHECK(std::abs(matrix_free.singular_values(0) - dense.singular_values(0)) < 1e-12);

  CompactnessProxy a, b;
  a.count_above = 10;
  a.dimension = 50;
  b.count_above = 11;
  b.dimension = 100;
  CHECK(compactness_stable({a, b}, 0.1));
  b.count_above = 12;
  CHECK_FALSE(compactness_stable({a, b}, 0.1));
  b.count_above = 10;
  b.dimension = 50;
  CHECK_THROWS_AS(compactness_stable({a, b}, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(compactness_stable({a}, 0.1), std::invalid_argument);
}

TEST_CASE("magnetic sup on the coarsest sphere") {
  const BoundarySample s = sphere_sample(1);
  std::vector<double> lambda(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    lambda[i] = 2.0 + s.nodes[i](2);
  const MagneticSupResult r = magnetic_sup(s, lambda, MassParameter(1.0));
  CHECK(r.sup > 0.0);
  CHECK(r.sup < 0.1);
  CHECK(r.argmax_x != r.argmax_z);
}
