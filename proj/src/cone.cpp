#include "weylgrowth/cone.hpp"

#include "weylgrowth/errors.hpp"

#include <algorithm>
#include <functional>

namespace weylgrowth {

namespace {

constexpr double kMaxSubsets = 5e6;

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

// Calls f on every k-subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  if (binomial(n, k) > kMaxSubsets)
    throw CapExceeded("polyhedral enumeration over " + std::to_string(n) + " constraints is too large");
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool nonneg_on(const std::vector<RatVec>& hs, const RatVec& x) {
  for (const auto& h : hs)
    if (dot(h, x) < 0) return false;
  return true;
}

void push_unique(std::vector<RatVec>& out, RatVec v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
}

std::vector<RatVec> with_lineality(const RayEnumeration& e) {
  std::vector<RatVec> out = e.rays;
  for (const auto& l : e.lineality) {
    out.push_back(primitive(l));
    out.push_back(primitive(-l));
  }
  return out;
}

}  // namespace

PolyCone PolyCone::from_generators(std::size_t rank, std::vector<RatVec> generators) {
  for (const auto& g : generators) {
    if (g.size() != rank) throw InputError("cone generator has wrong dimension");
    if (weylgrowth::is_zero(g)) throw InputError("cone generators must be nonzero");
  }
  PolyCone c;
  c.rank = rank;
  c.generators = std::move(generators);
  c.has_generators = true;
  return c;
}

PolyCone PolyCone::from_halfspaces(std::size_t rank, std::vector<RatVec> halfspaces) {
  for (const auto& h : halfspaces)
    if (h.size() != rank) throw InputError("cone halfspace has wrong dimension");
  PolyCone c;
  c.rank = rank;
  c.halfspaces = std::move(halfspaces);
  c.has_halfspaces = true;
  return c;
}

bool PolyCone::contains(const RatVec& v) const {
  if (v.size() != rank) throw InputError("vector has wrong dimension");
  if (!has_halfspaces) return complete(*this).contains(v);
  return nonneg_on(halfspaces, v);
}

RayEnumeration cone_rays_from_halfspaces(std::size_t dim, const std::vector<RatVec>& halfspaces) {
  RayEnumeration out;
  if (halfspaces.empty()) {
    for (std::size_t i = 0; i < dim; ++i) out.lineality.push_back(unit_vector(dim, i));
    return out;
  }
  const RatMatrix h = RatMatrix::from_rows(halfspaces);
  out.lineality = nullspace(h);
  const std::size_t r = rank(h);
  if (r == 0) return out;
  for_each_subset(halfspaces.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> rows;
    for (auto i : idx) rows.push_back(halfspaces[i]);
    for (const auto& l : out.lineality) rows.push_back(l);
    const auto ker = rows.empty() ? std::vector<RatVec>{} : nullspace(RatMatrix::from_rows(rows));
    if (rows.empty()) {
      // dim == 1 and r == 1: the candidate directions are +-1
      for (const RatVec& x : {RatVec{1}, RatVec{-1}})
        if (nonneg_on(halfspaces, x)) push_unique(out.rays, x);
      return;
    }
    if (ker.size() != 1) return;
    const RatVec x = primitive(ker[0]);
    if (nonneg_on(halfspaces, x)) push_unique(out.rays, x);
    else if (nonneg_on(halfspaces, -x)) push_unique(out.rays, -x);
  });
  return out;
}

std::vector<RatVec> polyhedron_vertices(std::size_t dim, const std::vector<RatVec>& a, const std::vector<Rational>& b) {
  std::vector<RatVec> out;
  for_each_subset(a.size(), dim, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> rows;
    RatVec rhs;
    for (auto i : idx) {
      rows.push_back(a[i]);
      rhs.push_back(b[i]);
    }
    const auto x = solve(RatMatrix::from_rows(rows), rhs);
    if (!x) return;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (dot(a[i], *x) < b[i]) return;
    push_unique(out, *x);
  });
  return out;
}

std::vector<RatVec> irredundant_generators(std::size_t dim, const std::vector<RatVec>& generators) {
  if (generators.empty()) return {};
  const auto dual = cone_rays_from_halfspaces(dim, generators);
  const auto facets = with_lineality(dual);
  const auto primal = cone_rays_from_halfspaces(dim, facets);
  return with_lineality(primal);
}

PolyCone complete(const PolyCone& c, std::size_t rank_cap) {
  if (c.has_generators && c.has_halfspaces) return c;
  if (c.rank > rank_cap)
    throw CapExceeded("cone of rank " + std::to_string(c.rank) + " exceeds the double-description cap " +
                      std::to_string(rank_cap));
  PolyCone out = c;
  if (c.has_generators) {
    out.halfspaces = c.generators.empty() ? std::vector<RatVec>{} : with_lineality(cone_rays_from_halfspaces(c.rank, c.generators));
    if (c.generators.empty())
      for (std::size_t i = 0; i < c.rank; ++i) {
        out.halfspaces.push_back(unit_vector(c.rank, i));
        out.halfspaces.push_back(-unit_vector(c.rank, i));
      }
    out.has_halfspaces = true;
  } else if (c.has_halfspaces) {
    out.generators = with_lineality(cone_rays_from_halfspaces(c.rank, c.halfspaces));
    out.has_generators = true;
  } else {
    throw InputError("cone has neither generators nor halfspaces");
  }
  return out;
}

PolyCone dominant_cone(const RootSystem& rs) {
  PolyCone c = PolyCone::from_generators(rs.rank(), rs.chamber_rays());
  c.halfspaces = rs.simple_roots();
  c.has_halfspaces = true;
  return c;
}

PolyCone dual_cone(const PolyCone& c, std::size_t rank_cap) {
  const PolyCone full = c.has_generators ? c : complete(c);
  PolyCone d = PolyCone::from_halfspaces(c.rank, full.generators);
  if (full.generators.empty()) {
    for (std::size_t i = 0; i < c.rank; ++i) d.generators.push_back(unit_vector(c.rank, i));
    for (std::size_t i = 0; i < c.rank; ++i) d.generators.push_back(-unit_vector(c.rank, i));
    d.has_generators = true;
    return d;
  }
  if (c.rank <= rank_cap) {
    d.generators = with_lineality(cone_rays_from_halfspaces(c.rank, full.generators));
    d.has_generators = true;
  }
  return d;
}

bool contained_in_chamber(const RootSystem& rs, const PolyCone& c) {
  const PolyCone full = c.has_generators ? c : complete(c);
  for (const auto& g : full.generators)
    if (!is_dominant_vector(rs, g)) return false;
  return true;
}

bool avoids_facet(const RootSystem& rs, const PolyCone& c, std::size_t simple_index) {
  if (simple_index >= rs.rank()) throw InputError("simple root index out of range");
  if (!contained_in_chamber(rs, c)) throw PreconditionFailure("cone is not contained in the Weyl chamber");
  const PolyCone full = c.has_generators ? c : complete(c);
  const RatVec& alpha = rs.simple_roots()[simple_index];
  for (const auto& g : full.generators)
    if (dot(alpha, g) <= 0) return false;
  return true;
}

bool interior_dual_member(const PolyCone& c, const RatVec& mu) {
  const PolyCone full = c.has_generators ? c : complete(c);
  if (mu.size() != c.rank) throw InputError("covector has wrong dimension");
  for (const auto& g : full.generators)
    if (dot(mu, g) <= 0) return false;
  return true;
}

bool conv_hull_member(const RootSystem& rs, const RatVec& lambda, const RatVec& mu) {
  if (!is_dominant(rs, mu)) throw PreconditionFailure("conv_hull_member needs a dominant mu");
  const RatVec top = dominant_representative(rs, lambda).dominant;
  for (const auto& c : simple_root_coordinates(rs, mu - top))
    if (c < 0) return false;
  return true;
}

PositivityResult lemma_positivity(const RatMatrix& form, const std::vector<RatVec>& v, const RatVec& u) {
  if (!v.empty() && !linearly_independent(v)) throw PreconditionFailure("vectors are not linearly independent");
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (bilinear(form, v[i], v[j]) > 0) throw PreconditionFailure("vectors have a positive inner product");
  for (const auto& vi : v)
    if (bilinear(form, u, vi) < 0) throw PreconditionFailure("u pairs negatively with some v_i");
  PositivityResult out;
  if (v.empty()) {
    if (!is_zero(u)) throw PreconditionFailure("u is not in the span");
    out.all_nonnegative = true;
    return out;
  }
  const auto c = solve_least(RatMatrix::from_columns(v), u);
  if (!c) throw PreconditionFailure("u is not in the span of the vectors");
  out.coefficients = *c;
  out.all_nonnegative = std::all_of(c->begin(), c->end(), [](const Rational& x) { return x >= 0; });
  return out;
}

}  // namespace weylgrowth
