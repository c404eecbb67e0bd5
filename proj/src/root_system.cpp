#include "weylgrowth/root_system.hpp"

#include "weylgrowth/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace weylgrowth {

ModelInvariantError::ModelInvariantError(std::vector<std::string> violations)
    : std::runtime_error([&] {
        std::string msg = "growth model invariant violated";
        for (const auto& v : violations) msg += "; " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

namespace {

std::string key_of(const RatVec& v) {
  std::string k;
  for (const auto& x : v) {
    k += x.get_str();
    k += ',';
  }
  return k;
}

bool positive_definite(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix a = m;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r = sat_mul(r, i);
  return r;
}

std::uint64_t component_order(std::size_t r, std::size_t n_pos, bool simply_laced) {
  if (r == 1) return 2;
  if (simply_laced) {
    if (n_pos == r * (r + 1) / 2) return factorial(r + 1);
    if (n_pos == r * (r - 1)) return sat_mul(std::uint64_t{1} << (r - 1), factorial(r));
    if (r == 6 && n_pos == 36) return 51840;
    if (r == 7 && n_pos == 63) return 2903040;
    if (r == 8 && n_pos == 120) return 696729600;
  } else {
    if (r == 2 && n_pos == 6) return 12;
    if (r == 4 && n_pos == 24) return 1152;
    if (n_pos == r * r) return sat_mul(std::uint64_t{1} << r, factorial(r));
  }
  throw InputError("root system component of rank " + std::to_string(r) + " with " +
                   std::to_string(n_pos) + " positive roots is not of finite type");
}

long height(const PositiveRoot& r) {
  return std::accumulate(r.simple_coeffs.begin(), r.simple_coeffs.end(), 0L);
}

}  // namespace

Rational RootSystem::form(const RatVec& lambda, const RatVec& mu) const {
  return bilinear(form_, lambda, mu);
}

RatVec RootSystem::to_covector(const RatVec& vector) const { return form_inverse_ * vector; }

RatVec RootSystem::to_vector(const RatVec& covector) const { return form_ * covector; }

RatVec RootSystem::reflect(std::size_t i, const RatVec& covector) const {
  return reflections_.at(i) * covector;
}

RatMatrix RootSystem::vector_action(const RatMatrix& w) const { return form_ * w * form_inverse_; }

int RootSystem::multiplicity(const RatVec& covector) const {
  if (covector.size() != rank()) return 0;
  bool negative = false;
  for (const auto& x : covector) {
    if (x != 0) {
      negative = x < 0;
      break;
    }
  }
  const RatVec pos = negative ? -covector : covector;
  for (const auto& r : pos_roots_)
    if (r.coords == pos) return r.multiplicity;
  return 0;
}

bool RootSystem::is_reduced() const {
  return std::none_of(pos_roots_.begin(), pos_roots_.end(), [](const PositiveRoot& r) { return r.divisible; });
}

RootSystem RootSystem::build(const RootSystemData& data) {
  RootSystem rs;
  rs.source_ = data;
  rs.label_ = data.label;
  const std::size_t n = data.simple_roots.size();
  if (n == 0) throw InputError("root system needs at least one simple root");
  for (const auto& a : data.simple_roots)
    if (a.size() != n) throw InputError("simple roots must have length equal to the rank");
  if (!linearly_independent(data.simple_roots)) throw InputError("simple roots are not linearly independent");
  rs.simple_roots_ = data.simple_roots;

  rs.form_ = data.inner_product.value_or(RatMatrix::identity(n));
  if (rs.form_.rows() != n || rs.form_.cols() != n) throw InputError("inner product has wrong dimensions");
  if (!(rs.form_.transpose() == rs.form_)) throw InputError("inner product is not symmetric");
  if (!positive_definite(rs.form_)) throw InputError("inner product is not positive definite");
  rs.form_inverse_ = *inverse(rs.form_);
  rs.vector_form_ = rs.form_inverse_;

  const auto& simple = rs.simple_roots_;
  std::vector<Rational> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = rs.form(simple[j], simple[j]);
  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<long>> cartan(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational c = 2 * rs.form(simple[i], simple[j]) / norms[j];
      if (c.get_den() != 1) throw InputError("simple roots do not have integral Cartan numbers");
      if (i != j && c > 0) throw InputError("distinct simple roots must have nonpositive inner products");
      cartan[i][j] = c.get_num().get_si();
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    RatMatrix s = RatMatrix::identity(n);
    const RatVec qa = rs.form_ * simple[j];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s(r, c) -= 2 * simple[j][r] * qa[c] / norms[j];
    rs.reflections_.push_back(std::move(s));
  }

  // closure by height with the root-string criterion
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> ordered;
  std::vector<std::vector<long>> level;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    ordered.push_back(e);
    level.push_back(e);
  }
  while (!level.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& beta : level) {
      for (std::size_t j = 0; j < n; ++j) {
        long p = 0;
        for (;;) {
          auto down = beta;
          down[j] -= p + 1;
          if (!seen.count(down)) break;
          ++p;
        }
        long pairing = 0;
        for (std::size_t i = 0; i < n; ++i) pairing += beta[i] * cartan[i][j];
        if (p - pairing > 0) {
          auto up = beta;
          up[j] += 1;
          if (seen.insert(up).second) {
            next.push_back(up);
            ordered.push_back(up);
          }
        }
      }
    }
    if (ordered.size() > 100000) throw InputError("root closure does not terminate");
    level = std::move(next);
  }
  for (const auto& c : ordered) {
    PositiveRoot r;
    r.coords = zeros(n);
    for (std::size_t i = 0; i < n; ++i) r.coords = r.coords + Rational(c[i]) * simple[i];
    r.simple_coeffs = c;
    rs.pos_roots_.push_back(std::move(r));
  }

  // multiplicity table
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < rs.pos_roots_.size(); ++k) index[key_of(rs.pos_roots_[k].coords)] = k;
  std::map<std::string, bool> explicitly_set;
  std::vector<PositiveRoot> divisible;
  for (const auto& entry : data.multiplicities) {
    if (entry.root.size() != n) throw InputError("multiplicity entry has wrong dimension");
    if (entry.m < 1) throw InputError("multiplicities must be positive integers");
    RatVec root = entry.root;
    if (!root.empty()) {
      auto first = std::find_if(root.begin(), root.end(), [](const Rational& x) { return x != 0; });
      if (first == root.end()) throw InputError("zero vector in multiplicity table");
      if (*first < 0) root = -root;
    }
    auto it = index.find(key_of(root));
    if (it != index.end()) {
      auto& slot = rs.pos_roots_[it->second];
      if (explicitly_set[it->first] && slot.multiplicity != entry.m)
        throw InputError("conflicting multiplicities for one root");
      slot.multiplicity = entry.m;
      explicitly_set[it->first] = true;
      continue;
    }
    const RatVec half = Rational(1, 2) * root;
    auto hit = index.find(key_of(half));
    if (hit == index.end() || rs.pos_roots_[hit->second].divisible)
      throw InputError("multiplicity entry " + key_of(entry.root) + " is not a root or twice a root");
    const auto& base = rs.pos_roots_[hit->second];
    // 2*alpha is admissible only when <gamma, (2 alpha)^vee> is an integer for every root gamma
    const Rational base_norm = rs.form(base.coords, base.coords);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = rs.form(simple[j], base.coords) / base_norm;
      if (v.get_den() != 1) throw InputError("twice the root " + key_of(half) + " cannot be a root");
    }
    auto dup = std::find_if(divisible.begin(), divisible.end(), [&](const PositiveRoot& d) { return d.coords == root; });
    if (dup != divisible.end()) {
      if (dup->multiplicity != entry.m) throw InputError("conflicting multiplicities for one root");
      continue;
    }
    PositiveRoot d;
    d.coords = root;
    d.simple_coeffs = base.simple_coeffs;
    for (auto& c : d.simple_coeffs) c *= 2;
    d.multiplicity = entry.m;
    d.divisible = true;
    divisible.push_back(std::move(d));
  }
  std::stable_sort(divisible.begin(), divisible.end(),
                   [](const PositiveRoot& a, const PositiveRoot& b) { return height(a) < height(b); });
  for (auto& d : divisible) rs.pos_roots_.push_back(std::move(d));

  // W-invariance of the multiplicity function and of the set of divisible roots
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& r : rs.pos_roots_) {
      const RatVec image = rs.reflect(j, r.coords);
      const int m = rs.multiplicity(image);
      if (m == 0) {
        if (r.divisible)
          throw InputError("set of divisible roots is not Weyl-invariant");
        throw InputError("simple roots do not generate a root system");
      }
      if (m != r.multiplicity)
        throw InputError("multiplicity map is not W-invariant: root " + key_of(r.coords) + " has m=" +
                         std::to_string(r.multiplicity) + " but its reflection has m=" + std::to_string(m));
    }
  }

  // irreducible components
  std::vector<std::size_t> comp(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<std::size_t> members{s};
    comp[s] = rs.components_.size();
    for (std::size_t k = 0; k < members.size(); ++k)
      for (std::size_t t = 0; t < n; ++t)
        if (comp[t] == n && cartan[members[k]][t] != 0) {
          comp[t] = comp[s];
          members.push_back(t);
        }
    std::sort(members.begin(), members.end());
    rs.components_.push_back(members);
  }
  for (const auto& members : rs.components_) {
    std::size_t n_pos = 0;
    std::set<std::string> lengths;
    for (const auto& r : rs.pos_roots_) {
      if (r.divisible) continue;
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (r.simple_coeffs[i] != 0 && comp[i] != comp[members.front()]) inside = false;
      if (!inside) continue;
      ++n_pos;
      lengths.insert(rs.form(r.coords, r.coords).get_str());
    }
    rs.weyl_order_ = sat_mul(rs.weyl_order_, component_order(members.size(), n_pos, lengths.size() == 1));
  }

  // fundamental weights: 2<omega_i, alpha_j>/<alpha_j, alpha_j> = delta_ij
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const RatVec qa = rs.form_ * simple[j];
    for (std::size_t c = 0; c < n; ++c) m(j, c) = 2 * qa[c] / norms[j];
  }
  const RatMatrix m_inv = *inverse(m);
  for (std::size_t i = 0; i < n; ++i) rs.fundamental_weights_.push_back(m_inv.col(i));

  rs.rho_ = zeros(n);
  for (const auto& r : rs.pos_roots_) rs.rho_ = rs.rho_ + frac(r.multiplicity, 2) * r.coords;

  const RatMatrix roots_as_rows = RatMatrix::from_rows(simple);
  const RatMatrix rays = *inverse(roots_as_rows);
  for (std::size_t i = 0; i < n; ++i) rs.chamber_rays_.push_back(primitive(rays.col(i)));

  // w0 maps the antidominant regular covector to the dominant one
  RatVec regular = zeros(n);
  for (const auto& w : rs.fundamental_weights_) regular = regular + w;
  rs.longest_ = dominant_representative(rs, -regular).w;
  rs.opposition_ = rs.longest_.matrix;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) rs.opposition_(r, c) = -rs.opposition_(r, c);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec image = rs.opposition_ * simple[i];
    auto it = std::find(simple.begin(), simple.end(), image);
    if (it == simple.end()) throw std::logic_error("opposition involution does not preserve the simple roots");
    rs.opposition_perm_.push_back(static_cast<std::size_t>(it - simple.begin()));
  }
  return rs;
}

RatVec rho(const RootSystem& rs) { return rs.rho(); }

std::vector<RatVec> fundamental_weights(const RootSystem& rs) { return rs.fundamental_weights(); }

RatMatrix opposition_involution(const RootSystem& rs) { return rs.opposition(); }

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::uint64_t cap) {
  if (rs.predicted_weyl_order() > cap)
    throw CapExceeded("Weyl group of order " + std::to_string(rs.predicted_weyl_order()) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  const std::size_t n = rs.rank();
  RatVec regular = zeros(n);
  for (const auto& w : rs.fundamental_weights()) regular = regular + w;
  std::vector<WeylElement> out;
  std::unordered_set<std::string> seen;
  out.push_back({RatMatrix::identity(n), {}});
  seen.insert(key_of(regular));
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      WeylElement next{rs.reflection(j) * out[k].matrix, {}};
      if (!seen.insert(key_of(next.matrix * regular)).second) continue;
      next.word.push_back(static_cast<int>(j));
      next.word.insert(next.word.end(), out[k].word.begin(), out[k].word.end());
      out.push_back(std::move(next));
      if (out.size() > cap)
        throw CapExceeded("Weyl group enumeration exceeded the cap " + std::to_string(cap));
    }
  }
  return out;
}

DominantRepresentative dominant_representative(const RootSystem& rs, const RatVec& lambda) {
  const std::size_t n = rs.rank();
  if (lambda.size() != n) throw InputError("covector has wrong dimension");
  DominantRepresentative out{lambda, {RatMatrix::identity(n), {}}};
  for (;;) {
    std::size_t j = 0;
    while (j < n && rs.form(out.dominant, rs.simple_roots()[j]) >= 0) ++j;
    if (j == n) return out;
    out.dominant = rs.reflect(j, out.dominant);
    out.w.matrix = rs.reflection(j) * out.w.matrix;
    out.w.word.insert(out.w.word.begin(), static_cast<int>(j));
  }
}

bool is_dominant(const RootSystem& rs, const RatVec& covector) {
  for (const auto& a : rs.simple_roots())
    if (rs.form(covector, a) < 0) return false;
  return true;
}

bool is_dominant_vector(const RootSystem& rs, const RatVec& vector) {
  for (const auto& a : rs.simple_roots())
    if (dot(a, vector) < 0) return false;
  return true;
}

RatVec apply_opposition(const RootSystem& rs, const RatVec& covector) { return rs.opposition() * covector; }

RatVec apply_opposition_to_vector(const RootSystem& rs, const RatVec& vector) {
  return rs.vector_action(rs.opposition()) * vector;
}

RatVec simple_root_coordinates(const RootSystem& rs, const RatVec& covector) {
  return *solve(RatMatrix::from_columns(rs.simple_roots()), covector);
}

ThetaResult strongly_orthogonal_theta(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  auto is_root_or_zero = [&](const RatVec& v) { return is_zero(v) || rs.is_root(v); };
  std::vector<const PositiveRoot*> pool;
  for (const auto& r : rs.positive_roots()) pool.push_back(&r);

  ThetaResult out;
  out.theta = zeros(n);
  std::deque<std::vector<const PositiveRoot*>> work{pool};
  while (!work.empty()) {
    auto current = std::move(work.front());
    work.pop_front();
    if (current.empty()) continue;
    // split into connected pieces under non-orthogonality
    std::vector<int> tag(current.size(), -1);
    int pieces = 0;
    for (std::size_t s = 0; s < current.size(); ++s) {
      if (tag[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      tag[s] = pieces;
      while (!stack.empty()) {
        const std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < current.size(); ++b)
          if (tag[b] < 0 && rs.form(current[a]->coords, current[b]->coords) != 0) {
            tag[b] = pieces;
            stack.push_back(b);
          }
      }
      ++pieces;
    }
    for (int p = 0; p < pieces; ++p) {
      const PositiveRoot* top = nullptr;
      for (std::size_t k = 0; k < current.size(); ++k)
        if (tag[k] == p && (!top || height(*current[k]) > height(*top))) top = current[k];
      out.roots.push_back(top->coords);
      out.theta = out.theta + Rational(1, 2) * top->coords;
      std::vector<const PositiveRoot*> rest;
      for (std::size_t k = 0; k < current.size(); ++k) {
        if (tag[k] != p || current[k] == top) continue;
        const RatVec& g = current[k]->coords;
        if (rs.form(g, top->coords) != 0) continue;
        if (is_root_or_zero(g + top->coords) || is_root_or_zero(g - top->coords)) continue;
        rest.push_back(current[k]);
      }
      work.push_back(std::move(rest));
    }
  }
  return out;
}

}  // namespace weylgrowth
