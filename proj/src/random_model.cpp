#include "weylgrowth/errors.hpp"
#include "weylgrowth/growth.hpp"

#include <algorithm>

namespace weylgrowth {

GrowthModel random_growth_model(const RootSystem& rs, std::mt19937_64& rng, const RandomModelOptions& opt) {
  const std::size_t n = rs.rank();
  std::uniform_int_distribution<int> weight(0, opt.coefficient_range);
  std::uniform_int_distribution<int> entry(-opt.coefficient_range, opt.coefficient_range);
  std::uniform_int_distribution<int> shrink(2, 4);
  const RatVec& rho = rs.rho();

  for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
    std::vector<RatVec> gens;
    for (int k = 0; k < opt.generator_count; ++k) {
      RatVec v = zeros(n);
      for (const auto& r : rs.chamber_rays()) v = v + Rational(weight(rng)) * r;
      if (is_zero(v)) continue;
      gens.push_back(primitive(v));
      gens.push_back(primitive(apply_opposition_to_vector(rs, v)));
    }
    if (gens.empty()) continue;
    gens = irredundant_generators(n, gens);

    std::vector<RatVec> xi;
    for (int k = 0; k < opt.piece_count; ++k) {
      RatVec x = zeros(n);
      for (auto& c : x) c = entry(rng);
      for (RatVec y : {x, apply_opposition(rs, x)})
        if (std::find(xi.begin(), xi.end(), y) == xi.end()) xi.push_back(std::move(y));
    }

    // scale so that |min_i xi_i(g)| <= rho(g) on every generator
    Rational scale = 1;
    bool first = true;
    for (const auto& g : gens) {
      Rational m = dot(xi.front(), g);
      for (const auto& x : xi) m = std::min(m, dot(x, g));
      if (m == 0) continue;
      const Rational bound = dot(rho, g) / abs(m);
      if (first || bound < scale) scale = bound;
      first = false;
    }
    scale = scale * frac(shrink(rng), 4);

    std::vector<RatVec> pieces;
    for (const auto& x : xi) pieces.push_back(rho + scale * x);
    GrowthModel model(rs, PolyCone::from_generators(n, gens), pieces);
    if (modified_limit_cone(model).empty) continue;
    return model;
  }
  throw std::runtime_error("could not draw a random growth model with delta' > 0");
}

}  // namespace weylgrowth
