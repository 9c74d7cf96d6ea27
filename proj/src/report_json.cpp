#include "dirac_shell/report_json.hpp"

#include <cstdio>
#include <sstream>

namespace dirac_shell {

Json scalar_json(const Scalar &s) {
  return {{"value", s.value()}, {"text", s.to_string()}, {"exact", s.is_exact()}};
}

Json pair_json(const ParamPair &p) {
  return {{"lambda_e", scalar_json(p.lambda_e)}, {"lambda_n", scalar_json(p.lambda_n)}};
}

Json transform_json(const TransformResult &t) {
  Json preds = Json::array();
  for (const auto &p : t.predicates)
    preds.push_back({{"name", p.name}, {"passed", p.passed}, {"exact", p.exact},
                     {"residual", p.residual}});
  return {{"gamma", scalar_json(t.gamma)},
          {"lambda_n_prime", scalar_json(t.lambda_n_prime)},
          {"target", t.target ? pair_json(*t.target) : Json()},
          {"predicates", preds},
          {"exact", t.exact},
          {"admissible", t.admissible()}};
}

Json coro3_json(const Coro3Result &c) {
  return {{"theta", c.theta.theta},
          {"cos_theta", c.theta.cos_theta},
          {"forbidden_cos", c.theta.forbidden_cos},
          {"used_fallback", c.theta.used_fallback},
          {"value", c.value},
          {"gamma", c.gamma},
          {"lambda_n_prime", c.lambda_n_prime},
          {"target", pair_json(c.target)}};
}

Json region_json(const RegionLabel &r) {
  return {{"d", scalar_json(r.d)},
          {"on_d0", r.on_d0},
          {"on_d4", r.on_d4},
          {"on_dm4", r.on_dm4},
          {"on_red_plus", r.on_red_plus},
          {"on_red_minus", r.on_red_minus},
          {"applicable", r.applicable},
          {"exact", r.exact}};
}

Json identity_json(const IdentityResult &r) {
  return {{"equal", r.equal},
          {"deviation", r.deviation},
          {"relative_deviation", r.relative_deviation},
          {"closed_over_basis", r.closed_over_basis},
          {"lhs", r.lhs.to_string()},
          {"rhs", r.rhs.to_string()}};
}

Json gauge_angle_json(const GaugeAngle &g) {
  return {{"samples", g.lambda.size()},
          {"max_step", g.max_step},
          {"max_second_difference", g.max_second_difference()},
          {"reconstruction_error", g.reconstruction_error()},
          {"final_winding", g.winding.empty() ? 0L : g.winding.back()}};
}

std::string gauge_angle_csv(const GaugeAngle &g) {
  std::ostringstream os;
  os << "sample,lambda,rhs_re,rhs_im,theta\n";
  char buf[160];
  for (std::size_t k = 0; k < g.lambda.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g\n", k, g.lambda[k],
                  g.rhs[k].real(), g.rhs[k].imag(), g.theta[k]);
    os << buf;
  }
  return os.str();
}

} // namespace dirac_shell
