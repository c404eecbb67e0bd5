#include "weylgrowth/io.hpp"

#include "weylgrowth/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace weylgrowth {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<RatVec> ratvecs_from_json(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<RatVec> out;
  for (const auto& e : j) {
    auto v = ratvec_from_json(e);
    if (v.size() != dim) throw InputError(std::string(what) + " entry has wrong dimension");
    out.push_back(std::move(v));
  }
  return out;
}

Json matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (!std::isfinite(x)) throw InputError("non-finite number");
    return from_double(x);
  }
  throw InputError("expected a rational number, got " + j.dump());
}

RatVec ratvec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
  RatVec v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json number_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number_json(x));
  return out;
}

RootSystem root_system_from_json(const Json& j) {
  if (j.is_string()) return build_root_system(j.get<std::string>());
  if (!j.is_object()) throw InputError("root_system must be a preset name or an object");
  if (j.contains("preset")) return build_root_system(j.at("preset").get<std::string>());
  RootSystemData d;
  const auto& simple = field(j, "simple_roots");
  if (!simple.is_array() || simple.empty()) throw InputError("simple_roots must be a nonempty array");
  const std::size_t n = ratvec_from_json(simple.front()).size();
  d.simple_roots = ratvecs_from_json(simple, n, "simple_roots");
  if (j.contains("multiplicities")) {
    for (const auto& e : j.at("multiplicities")) {
      MultiplicityEntry m;
      m.root = ratvec_from_json(field(e, "root"));
      const auto& mj = field(e, "m");
      if (!mj.is_number_integer()) throw InputError("multiplicity must be an integer");
      m.m = mj.get<int>();
      d.multiplicities.push_back(std::move(m));
    }
  }
  if (j.contains("inner_product")) d.inner_product = RatMatrix::from_rows(ratvecs_from_json(j.at("inner_product"), n, "inner_product"));
  if (j.contains("label")) d.label = j.at("label").get<std::string>();
  return RootSystem::build(d);
}

Json root_system_to_json(const RootSystem& rs) {
  Json out;
  out["label"] = rs.label();
  out["rank"] = rs.rank();
  out["simple_roots"] = Json::array();
  for (const auto& a : rs.simple_roots()) out["simple_roots"].push_back(to_json(a));
  out["positive_roots"] = Json::array();
  for (const auto& r : rs.positive_roots())
    out["positive_roots"].push_back({{"root", to_json(r.coords)}, {"multiplicity", r.multiplicity},
                                     {"simple_coefficients", r.simple_coeffs}});
  out["rho"] = to_json(rs.rho());
  const auto theta = strongly_orthogonal_theta(rs);
  out["theta"] = to_json(theta.theta);
  out["theta_roots"] = Json::array();
  for (const auto& r : theta.roots) out["theta_roots"].push_back(to_json(r));
  out["fundamental_weights"] = Json::array();
  for (const auto& w : rs.fundamental_weights()) out["fundamental_weights"].push_back(to_json(w));
  out["iota_permutation"] = rs.opposition_permutation();
  out["inner_product"] = matrix_json(rs.inner_product());
  out["weyl_order"] = rs.predicted_weyl_order();
  return out;
}

PolyCone cone_from_json(const Json& j, const RootSystem& rs) {
  const std::size_t n = rs.rank();
  if (j.is_string()) {
    if (j.get<std::string>() == "chamber") return dominant_cone(rs);
    throw InputError("unknown cone name " + j.dump());
  }
  if (!j.is_object()) throw InputError("cone must be an object or \"chamber\"");
  PolyCone c;
  if (j.contains("generators")) {
    c = PolyCone::from_generators(n, ratvecs_from_json(j.at("generators"), n, "generators"));
    if (j.contains("halfspaces")) {
      c.halfspaces = ratvecs_from_json(j.at("halfspaces"), n, "halfspaces");
      c.has_halfspaces = true;
    }
  } else if (j.contains("halfspaces")) {
    c = PolyCone::from_halfspaces(n, ratvecs_from_json(j.at("halfspaces"), n, "halfspaces"));
  } else {
    throw InputError("cone needs generators or halfspaces");
  }
  if (j.contains("open")) c.open = j.at("open").get<bool>();
  return c;
}

Json cone_to_json(const PolyCone& c) {
  Json out;
  out["rank"] = c.rank;
  if (c.has_generators) {
    out["generators"] = Json::array();
    for (const auto& g : c.generators) out["generators"].push_back(to_json(g));
  }
  if (c.has_halfspaces) {
    out["halfspaces"] = Json::array();
    for (const auto& h : c.halfspaces) out["halfspaces"].push_back(to_json(h));
  }
  out["open"] = c.open;
  return out;
}

ModelFile model_from_json(const Json& j) {
  try {
    auto rs = root_system_from_json(field(j, "root_system"));
    auto cone = j.contains("cone") ? cone_from_json(j.at("cone"), rs) : dominant_cone(rs);
    auto pieces = ratvecs_from_json(field(j, "pieces"), rs.rank(), "pieces");
    std::vector<RatVec> mus;
    if (j.contains("mu")) mus = ratvecs_from_json(j.at("mu"), rs.rank(), "mu");
    return ModelFile{GrowthModel(std::move(rs), std::move(cone), std::move(pieces)), std::move(mus)};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed model: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

ModelFile load_model(const std::string& path) { return model_from_json(read_json_file(path)); }

MatrixGroupSpec orbit_spec_from_json(const Json& j) {
  try {
    MatrixGroupSpec s;
    if (j.contains("ambient")) s.ambient = j.at("ambient").get<std::string>();
    const auto amb = parse_ambient(s.ambient);
    const auto n = static_cast<Eigen::Index>(amb.matrix_size);
    for (const auto& g : field(j, "generators")) {
      if (!g.is_array() || static_cast<Eigen::Index>(g.size()) != n) throw InputError("generator has wrong size");
      Eigen::MatrixXd m(n, n);
      for (Eigen::Index r = 0; r < n; ++r) {
        const auto& row = g.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw InputError("generator has wrong size");
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = to_double(rational_from_json(row.at(static_cast<std::size_t>(c))));
      }
      s.generators.push_back(m);
    }
    if (j.contains("max_word_length")) s.max_word_length = j.at("max_word_length").get<int>();
    if (j.contains("semigroup")) s.semigroup = j.at("semigroup").get<bool>();
    if (j.contains("dedupe_tolerance")) s.dedupe_tolerance = j.at("dedupe_tolerance").get<double>();
    if (s.max_word_length < 0) throw InputError("max_word_length must be nonnegative");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed generator file: ") + e.what());
  }
}

Json critical_to_json(const RootSystem& rs, const CriticalData& c) {
  Json out;
  out["delta_prime"] = number_json(c.delta_prime_max);
  out["v_gamma"] = to_json(c.v_gamma);
  out["mu_gamma"] = to_json(c.mu_gamma);
  out["mu_gamma_route_b"] = to_json(c.mu_gamma_b);
  out["route_gap"] = number_json(c.route_gap);
  out["route_b_converged"] = c.route_b_converged;
  Json theta = Json::array();
  for (std::size_t i = 0; i < c.theta_omega.size(); ++i)
    theta.push_back({{"omega", i + 1}, {"weight", to_json(rs.fundamental_weights()[i])},
                     {"theta", number_json(c.theta_omega[i])}});
  out["theta_omega"] = theta;
  return out;
}

Json wall_bound_to_json(std::size_t alpha, const WallBound& b) {
  return {{"alpha", alpha + 1},
          {"direction", to_json(b.direction)},
          {"c_raw", to_json(b.c_raw)},
          {"primitive_direction", to_json(b.primitive_direction)},
          {"c", to_json(b.c)},
          {"bound", to_json(b.bound)}};
}

Json suite_to_json(const SuiteReport& r) {
  Json f = Json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) f.push_back(r.failures[i]);
  return {{"lemma", r.lemma},
          {"preset", r.preset},
          {"samples", r.samples},
          {"failure_count", r.failures.size()},
          {"failures", f},
          {"passed", r.passed()}};
}

Json onewall_to_json(const OneWallReport& r) {
  return {{"alpha", r.alpha + 1},
          {"hypothesis", r.hypothesis},
          {"premise", r.premise},
          {"conclusion", r.conclusion},
          {"theta", number_json(r.theta)},
          {"delta_prime", number_json(r.delta_prime)},
          {"status", to_string(r.status)},
          {"meaning", describe(r.status)}};
}

Json b3_row_to_json(const B3Row& r) {
  Json theta = Json::array(), closed = Json::array();
  for (int i = 0; i < 3; ++i) {
    theta.push_back(to_json(r.theta[i]));
    closed.push_back(to_json(r.closed_form[i]));
  }
  return {{"mu", to_json(r.mu)},
          {"theta", theta},
          {"closed_form", closed},
          {"theta3_sum_normalized", to_json(r.theta3_sum_normalized)},
          {"matches", r.matches}};
}

}  // namespace weylgrowth
