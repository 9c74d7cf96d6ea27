#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dirac_shell/boundary_operator.hpp"
#include "dirac_shell/coupling.hpp"

namespace dirac_shell {

/// Real scalar field sampled at the nodes of a sample.
struct SurfaceScalarField {
  std::vector<double> values;
  std::string description;

  static SurfaceScalarField from_function(const BoundarySample &sample,
                                          const std::function<double(const Vec3 &)> &f,
                                          std::string description = {});
  static SurfaceScalarField constant(const BoundarySample &sample, double c);
  double min_abs() const;
};

/// gamma = (d+4)(1+cos t)/2 - 4 + 2 lambda_n sin t, evaluated as
/// d - (d+4) sin^2(t/2) + 2 lambda_n sin t so that t = 0 returns d exactly.
double gauge_gamma(const CouplingParams &p, double theta);
/// lambda_n' = lambda_n cos t - (d+4) sin t / 4.
double gauge_lambda_n_prime(const CouplingParams &p, double theta);

/// (lambda_n alpha.N - lambda_e)/d - C. Throws DomainError when d = 0.
BoundaryOperator lambda_electrostatic(const CouplingParams &p, const BoundaryOperator &c_sigma);
/// (lambda_n' alpha.N - lambda_e)/gamma - C. Throws DomainError when gamma = 0.
BoundaryOperator lambda_z(const CouplingParams &p, double theta, const BoundaryOperator &c_sigma);
/// -(1/lambda) alpha.N - C. Throws DomainError when lambda vanishes at a node.
BoundaryOperator lambda_magnetic(const SurfaceScalarField &lambda, const BoundaryOperator &c_sigma);
/// (-+lambda_n alpha.N + lambda_e)/d +- C.
BoundaryOperator lambda_plus(const CouplingParams &p, const BoundaryOperator &c_sigma);
BoundaryOperator lambda_minus(const CouplingParams &p, const BoundaryOperator &c_sigma);

/// Block-diagonal multiplication by lambda_e + lambda_n alpha.N.
BoundaryOperator electrostatic_potential(const CouplingParams &p, SampleHandle sample);

/// max |entry| of V (Lambda + C) + I for V = lambda_e + lambda_n alpha.N and
/// Lambda = lambda_electrostatic(p, C). Zero up to rounding in the coefficients.
double electrostatic_potential_residual(const CouplingParams &p, const BoundaryOperator &c_sigma);
/// max |entry| of lambda alpha.N (Lambda_lambda + C) + I.
double magnetic_potential_residual(const SurfaceScalarField &lambda,
                                   const BoundaryOperator &c_sigma);
/// max |entry| of Lambda + Lambda_+; exactly zero.
double plus_relation_residual(const CouplingParams &p, const BoundaryOperator &c_sigma);

/// With z = e^{i theta}, A = (1+z)/2 + (1-z) i M (Lambda + C) and
/// B = (1+z)/2 - (1-z) i C M: ||Lambda_z A - B Lambda|| on the band.
double intertwine_defect(const CouplingParams &p, double theta, const BoundaryOperator &c_sigma,
                         const ResolvedBand &band);
double intertwine_defect(const CouplingParams &p, double theta, const BoundaryOperator &c_sigma);

/// || Lambda_+ Lambda_- - (1/d - 1/4 + (lambda_n/d - C M){C, M}) || on the band.
double factorization_defect(const CouplingParams &p, const BoundaryOperator &c_sigma,
                            const ResolvedBand &band);
double factorization_defect(const CouplingParams &p, const BoundaryOperator &c_sigma);

/// Smallest singular value of Lambda on the band: an invertibility proxy only,
/// Fredholmness itself is not certified.
double fredholm_gap(const BoundaryOperator &lambda, const ResolvedBand &band);
double fredholm_gap(const BoundaryOperator &lambda);

} // namespace dirac_shell
