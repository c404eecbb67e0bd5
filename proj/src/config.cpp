#include "weylgrowth/config.hpp"

#include "weylgrowth/errors.hpp"
#include "weylgrowth/io.hpp"

#include <cstdlib>

namespace weylgrowth {

namespace {

template <class T>
T positive(const Json& v, const std::string& key) {
  if (!v.is_number()) throw InputError("config key " + key + " must be a number");
  const T x = v.get<T>();
  if (!(x > T(0))) throw InputError("config key " + key + " must be positive");
  return x;
}

}  // namespace

Config load_config(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.is_object()) throw InputError(path + ": config must be a JSON object");
  Config c;
  for (const auto& [key, v] : j.items()) {
    if (key == "tolerance") c.tolerance = positive<double>(v, key);
    else if (key == "max_iter") c.max_iter = positive<int>(v, key);
    else if (key == "multi_start") c.multi_start = positive<int>(v, key);
    else if (key == "weyl_cap") c.weyl_cap = positive<std::uint64_t>(v, key);
    else if (key == "dd_rank_cap") c.dd_rank_cap = positive<std::size_t>(v, key);
    else if (key == "orbit_cap") c.orbit_cap = positive<std::size_t>(v, key);
    else if (key == "seed") {
      if (!v.is_number_unsigned()) throw InputError("config key seed must be a nonnegative integer");
      c.seed = v.get<std::uint64_t>();
    } else {
      throw InputError(path + ": unknown config key " + key);
    }
  }
  return c;
}

Config config_from_env() {
  const char* p = std::getenv("WEYLGROWTH_CONFIG");
  if (p == nullptr || *p == '\0') return {};
  return load_config(p);
}

SolverConfig solver_config(const Config& c) {
  SolverConfig s;
  s.tolerance = c.tolerance;
  s.max_iter = c.max_iter;
  s.multi_start = c.multi_start;
  s.seed = c.seed;
  return s;
}

}  // namespace weylgrowth
