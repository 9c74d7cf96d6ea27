#pragma once

namespace dirac_shell {

/// Shell coupling strengths: lambda_e multiplies the identity, lambda_n multiplies alpha.N.
struct CouplingParams {
  double lambda_e = 0.0;
  double lambda_n = 0.0;

  double d() const { return lambda_e * lambda_e - lambda_n * lambda_n; }
};

} // namespace dirac_shell
