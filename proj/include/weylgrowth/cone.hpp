#pragma once

// Polyhedral cones over the rationals. A cone in a is described by generator
// vectors and/or halfspace covectors mu with mu(v) >= 0. Dual cones swap the
// roles: their generators are covectors and their halfspaces are vectors.

#include "weylgrowth/rational.hpp"
#include "weylgrowth/root_system.hpp"

#include <cstddef>
#include <vector>

namespace weylgrowth {

inline constexpr std::size_t kDefaultRankCap = 4;
inline constexpr std::size_t kInternalRankCap = 10;

struct PolyCone {
  std::size_t rank = 0;
  std::vector<RatVec> generators;
  std::vector<RatVec> halfspaces;
  bool has_generators = false;  // an empty generator list then means the cone {0}
  bool has_halfspaces = false;
  bool open = false;  // interior of the closed cone described here

  static PolyCone from_generators(std::size_t rank, std::vector<RatVec> generators);
  static PolyCone from_halfspaces(std::size_t rank, std::vector<RatVec> halfspaces);

  bool is_zero() const { return has_generators && generators.empty(); }
  /// Exact membership in the closed cone.
  bool contains(const RatVec& v) const;
};

struct RayEnumeration {
  std::vector<RatVec> rays;       // primitive extreme rays of the pointed part
  std::vector<RatVec> lineality;  // basis of the lineality space
};

/// Extreme rays of {x : h(x) >= 0 for all h}, by enumeration of tight subsystems.
RayEnumeration cone_rays_from_halfspaces(std::size_t dim, const std::vector<RatVec>& halfspaces);

/// Vertices of {x : a_i(x) >= b_i}. Empty when the polyhedron has none.
std::vector<RatVec> polyhedron_vertices(std::size_t dim, const std::vector<RatVec>& a, const std::vector<Rational>& b);

/// Drops generators that are positive combinations of the others and normalizes to primitive vectors.
std::vector<RatVec> irredundant_generators(std::size_t dim, const std::vector<RatVec>& generators);

/// Fills in the missing representation. Throws CapExceeded above rank_cap.
PolyCone complete(const PolyCone& c, std::size_t rank_cap = kInternalRankCap);

PolyCone dominant_cone(const RootSystem& rs);

/// Dual cone. Generators of the dual are recovered for rank <= rank_cap, otherwise
/// only the halfspace form is returned.
PolyCone dual_cone(const PolyCone& c, std::size_t rank_cap = kDefaultRankCap);

bool contained_in_chamber(const RootSystem& rs, const PolyCone& c);
/// C meets ker(alpha) only at 0. Requires C inside the closed chamber.
bool avoids_facet(const RootSystem& rs, const PolyCone& c, std::size_t simple_index);
/// mu(g) > 0 for every generator g.
bool interior_dual_member(const PolyCone& c, const RatVec& mu);

/// lambda in conv(W mu) via the dominance order. mu must be dominant.
bool conv_hull_member(const RootSystem& rs, const RatVec& lambda, const RatVec& mu);

struct PositivityResult {
  RatVec coefficients;
  bool all_nonnegative = false;
};
/// Expansion of u in the v_i, which must be independent with pairwise nonpositive
/// inner products, and u must pair nonnegatively with every v_i.
PositivityResult lemma_positivity(const RatMatrix& form, const std::vector<RatVec>& v, const RatVec& u);

}  // namespace weylgrowth
