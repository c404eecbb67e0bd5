#pragma once

// JSON forms of root systems, cones, models and reports. Rationals are written
// as "p/q" strings; on input strings, integers and finite floats are accepted.

#include "weylgrowth/critical.hpp"
#include "weylgrowth/orbit.hpp"
#include "weylgrowth/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace weylgrowth {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j);
RatVec ratvec_from_json(const Json& j);
Json to_json(const Rational& q);
Json to_json(const RatVec& v);
/// +-infinity and NaN become the strings "inf", "-inf", "nan".
Json number_json(double x);
Json to_json(const Vec& v);

/// {"preset": name} or {"simple_roots", "multiplicities", "inner_product", "label"}.
RootSystem root_system_from_json(const Json& j);
Json root_system_to_json(const RootSystem& rs);

/// {"generators"} and/or {"halfspaces"}, optional "open"; the string "chamber" is a_+.
PolyCone cone_from_json(const Json& j, const RootSystem& rs);
Json cone_to_json(const PolyCone& c);

struct ModelFile {
  GrowthModel model;
  std::vector<RatVec> mus;  // covectors for the delta'_mu table
};
/// {"root_system", "cone", "pieces", "mu"}; InputError on a malformed file.
ModelFile model_from_json(const Json& j);
ModelFile load_model(const std::string& path);

MatrixGroupSpec orbit_spec_from_json(const Json& j);

Json critical_to_json(const RootSystem& rs, const CriticalData& c);
Json wall_bound_to_json(std::size_t alpha, const WallBound& b);
Json suite_to_json(const SuiteReport& r);
Json onewall_to_json(const OneWallReport& r);
Json b3_row_to_json(const B3Row& r);

/// Parses a file, mapping parse errors to InputError.
Json read_json_file(const std::string& path);

}  // namespace weylgrowth
