#pragma once

#include <json.hpp>

#include "dirac_shell/gauge.hpp"
#include "dirac_shell/nc_algebra.hpp"
#include "dirac_shell/param_maps.hpp"

namespace dirac_shell {

using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar &s);
Json pair_json(const ParamPair &p);
Json transform_json(const TransformResult &t);
Json coro3_json(const Coro3Result &c);
Json region_json(const RegionLabel &r);
Json identity_json(const IdentityResult &r);
Json gauge_angle_json(const GaugeAngle &g);

/// CSV with header sample,lambda,rhs_re,rhs_im,theta.
std::string gauge_angle_csv(const GaugeAngle &g);

} // namespace dirac_shell
