#include "weylgrowth/growth.hpp"

#include "weylgrowth/errors.hpp"
#include "weylgrowth/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace weylgrowth {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class T>
T convert(const Rational& q) {
  if constexpr (std::is_same_v<T, double>) return q.get_d();
  else return q;
}

template <class T>
std::vector<T> convert_vec(const RatVec& v) {
  std::vector<T> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(convert<T>(x));
  return out;
}

template <class T>
T dotT(const std::vector<T>& a, const std::vector<T>& b) {
  T s = T(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double fdot(const Vec& a, const Vec& b) { return dotT(a, b); }
double norm2(const Vec& a) { return std::sqrt(fdot(a, a)); }

template <class T>
std::vector<T> combine(const std::vector<std::vector<T>>& gens, const std::vector<T>& weights, std::size_t dim) {
  std::vector<T> v(dim, T(0));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t j = 0; j < dim; ++j) v[j] += weights[k] * gens[k][j];
  return v;
}

template <class T>
bool is_positive(const T& x, double tol) {
  if constexpr (std::is_same_v<T, double>) return x > tol;
  else return x > 0;
}

template <class T>
struct DeltaCore {
  DeltaStatus status = DeltaStatus::finite;
  T value{};
  bool minus_infinity = false;
  std::vector<T> witness;
  std::vector<T> certificate;
};

// max t over {v in cone(gens) : mu(v) = 1, p_i(v) >= t}, with the +infinity test first.
template <class T>
DeltaCore<T> delta_core(const std::vector<std::vector<T>>& gens, const std::vector<std::vector<T>>& pieces,
                        const std::vector<T>& mu, std::size_t dim, double tol) {
  DeltaCore<T> out;
  if (gens.empty()) {
    out.status = DeltaStatus::nonpositive;
    out.minus_infinity = true;
    return out;
  }
  std::vector<T> m(gens.size());
  std::vector<std::size_t> face;
  T mu_norm = T(0);
  for (const auto& x : mu) mu_norm += x * x;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    m[k] = dotT(mu, gens[k]);
    if constexpr (std::is_same_v<T, double>) {
      const double scale = std::sqrt(mu_norm) * norm2(gens[k]);
      if (std::abs(m[k]) <= 1e-12 * scale) m[k] = 0;
      else if (m[k] < 0 && -m[k] > tol * scale)
        throw PreconditionFailure("mu is negative on the cone: it is not in the dual cone");
      else if (m[k] < 0) m[k] = 0;
    } else {
      if (m[k] < 0) throw PreconditionFailure("mu is negative on the cone: it is not in the dual cone");
    }
    if (m[k] == 0) face.push_back(k);
  }

  if (!face.empty()) {
    const std::size_t nz = face.size();
    LinearProgram<T> lp(nz + 1);
    lp.objective[nz] = 1;
    lp.is_free[nz] = true;
    std::vector<T> ones(nz + 1, T(1));
    ones[nz] = T(0);
    lp.add_row(std::move(ones), RowSense::eq, T(1));
    for (const auto& p : pieces) {
      std::vector<T> row(nz + 1);
      for (std::size_t z = 0; z < nz; ++z) row[z] = dotT(p, gens[face[z]]);
      row[nz] = -1;
      lp.add_row(std::move(row), RowSense::ge, T(0));
    }
    const auto r = solve_lp(lp);
    if (r.status == LpStatus::optimal && is_positive(r.value, tol)) {
      out.status = DeltaStatus::infinite;
      std::vector<std::vector<T>> fg;
      for (auto k : face) fg.push_back(gens[k]);
      out.certificate = combine(fg, r.x, dim);
      return out;
    }
  }

  const std::size_t ng = gens.size();
  LinearProgram<T> lp(ng + 1);
  lp.objective[ng] = 1;
  lp.is_free[ng] = true;
  std::vector<T> norm_row(m);
  norm_row.push_back(T(0));
  lp.add_row(std::move(norm_row), RowSense::eq, T(1));
  for (const auto& p : pieces) {
    std::vector<T> row(ng + 1);
    for (std::size_t k = 0; k < ng; ++k) row[k] = dotT(p, gens[k]);
    row[ng] = -1;
    lp.add_row(std::move(row), RowSense::ge, T(0));
  }
  const auto r = solve_lp(lp);
  if (r.status == LpStatus::infeasible) {
    // mu vanishes on the whole cone
    out.status = DeltaStatus::nonpositive;
    out.minus_infinity = true;
    return out;
  }
  if (r.status == LpStatus::unbounded) {
    out.status = DeltaStatus::infinite;
    out.certificate = combine(gens, std::vector<T>(r.ray.begin(), r.ray.begin() + static_cast<long>(ng)), dim);
    return out;
  }
  if (r.status != LpStatus::optimal) throw std::runtime_error("linear program did not converge");
  out.value = r.value;
  out.witness = combine(gens, std::vector<T>(r.x.begin(), r.x.begin() + static_cast<long>(ng)), dim);
  out.status = is_positive(r.value, tol) ? DeltaStatus::finite : DeltaStatus::nonpositive;
  return out;
}

template <class T>
std::vector<std::vector<T>> convert_all(const std::vector<RatVec>& vs) {
  std::vector<std::vector<T>> out;
  for (const auto& v : vs) out.push_back(convert_vec<T>(v));
  return out;
}

Rational min_piece(const std::vector<RatVec>& pieces, const RatVec& v) {
  Rational best = dot(pieces.front(), v);
  for (std::size_t i = 1; i < pieces.size(); ++i) best = std::min(best, dot(pieces[i], v));
  return best;
}

std::string show(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

}  // namespace

const char* to_string(DeltaStatus s) {
  switch (s) {
    case DeltaStatus::finite: return "finite";
    case DeltaStatus::infinite: return "infinite";
    case DeltaStatus::nonpositive: return "nonpositive";
  }
  return "unknown";
}

GrowthModel::GrowthModel(RootSystem rs, PolyCone cone, std::vector<RatVec> pieces)
    : rs_(std::move(rs)), pieces_(std::move(pieces)) {
  const std::size_t n = rs_.rank();
  if (cone.rank != n) throw InputError("cone rank does not match the root system");
  if (pieces_.empty()) throw InputError("growth model needs at least one piece");
  for (const auto& p : pieces_)
    if (p.size() != n) throw InputError("piece has wrong dimension");
  if (cone.has_generators && !cone.generators.empty()) {
    auto irr = irredundant_generators(n, cone.generators);
    cone = PolyCone::from_generators(n, std::move(irr));
  }
  cone_ = complete(cone);
  for (const auto& p : pieces_) modified_.push_back(p - rs_.rho());
  gens_f_ = convert_all<double>(cone_.generators);
  halfspaces_f_ = convert_all<double>(cone_.halfspaces);
  pieces_f_ = convert_all<double>(pieces_);
  modified_f_ = convert_all<double>(modified_);
  rho_f_ = convert_vec<double>(rs_.rho());
}

bool GrowthModel::contains(const Vec& v, double tol) const {
  const double scale = std::max(1.0, norm2(v));
  for (const auto& h : halfspaces_f_)
    if (fdot(h, v) < -tol * scale * std::max(1.0, norm2(h))) return false;
  return true;
}

double GrowthModel::evaluate(const Vec& v) const {
  if (v.size() != rs_.rank()) throw InputError("vector has wrong dimension");
  if (!contains(v)) return -kInf;
  double best = kInf;
  for (const auto& p : pieces_f_) best = std::min(best, fdot(p, v));
  return best;
}

double GrowthModel::evaluate_modified(const Vec& v) const {
  const double psi = evaluate(v);
  return psi == -kInf ? psi : psi - fdot(rho_f_, v);
}

std::optional<Rational> GrowthModel::evaluate_exact(const RatVec& v) const {
  if (!cone_.contains(v)) return std::nullopt;
  return min_piece(pieces_, v);
}

std::optional<Rational> GrowthModel::evaluate_modified_exact(const RatVec& v) const {
  auto psi = evaluate_exact(v);
  if (!psi) return psi;
  return *psi - dot(rs_.rho(), v);
}

std::vector<std::string> GrowthModel::invariant_violations(std::size_t samples, std::uint64_t seed) const {
  std::vector<std::string> out;
  const RatVec& rho = rs_.rho();
  for (const auto& g : cone_.generators) {
    if (!is_dominant_vector(rs_, g)) out.push_back("cone is not contained in the Weyl chamber: generator " + show(g));
    const Rational psi = min_piece(pieces_, g);
    if (psi < 0) out.push_back("psi >= 0 fails at generator " + show(g));
    if (psi > 2 * dot(rho, g)) out.push_back("psi <= 2 rho fails at generator " + show(g));
    const RatVec ig = apply_opposition_to_vector(rs_, g);
    if (!cone_.contains(ig)) {
      out.push_back("cone is not stable under the opposition involution: generator " + show(g));
      continue;
    }
    if (min_piece(pieces_, ig) != psi) out.push_back("psi is not iota-invariant at generator " + show(g));
  }
  if (out.empty() && !cone_.generators.empty()) {
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      const RatVec v = random_cone_point(cone_, rng);
      if (min_piece(pieces_, apply_opposition_to_vector(rs_, v)) != min_piece(pieces_, v)) {
        out.push_back("psi is not iota-invariant at sample " + show(v));
        break;
      }
    }
  }
  return out;
}

void GrowthModel::validate(std::size_t samples, std::uint64_t seed) const {
  auto v = invariant_violations(samples, seed);
  if (!v.empty()) throw ModelInvariantError(std::move(v));
}

GrowthModel rho_multiple_model(const RootSystem& rs, const Rational& c) {
  return GrowthModel(rs, dominant_cone(rs), {c * rs.rho()});
}

ModifiedCone modified_limit_cone(const GrowthModel& g) {
  ModifiedCone out;
  const std::size_t n = g.root_system().rank();
  std::vector<RatVec> hs = g.cone().halfspaces;
  for (const auto& p : g.modified_pieces()) hs.push_back(p);
  out.closure = complete(PolyCone::from_halfspaces(n, hs));
  out.closure.open = true;
  const auto& gens = g.cone().generators;
  if (gens.empty()) return out;
  LinearProgram<Rational> lp(gens.size() + 1);
  lp.objective[gens.size()] = 1;
  lp.is_free[gens.size()] = true;
  std::vector<Rational> ones(gens.size() + 1, Rational(1));
  ones.back() = 0;
  lp.add_row(ones, RowSense::eq, 1);
  for (const auto& p : g.modified_pieces()) {
    std::vector<Rational> row;
    for (const auto& gen : gens) row.push_back(dot(p, gen));
    row.push_back(-1);
    lp.add_row(std::move(row), RowSense::ge, 0);
  }
  const auto r = solve_lp(lp);
  out.empty = !(r.status == LpStatus::optimal && r.value > 0);
  return out;
}

DeltaPrimeResult delta_prime(const GrowthModel& g, const Vec& mu, bool modified, double tol) {
  const std::size_t n = g.root_system().rank();
  if (mu.size() != n) throw InputError("covector has wrong dimension");
  if (std::all_of(mu.begin(), mu.end(), [](double x) { return x == 0; }))
    throw InputError("delta' is undefined for mu = 0");
  std::vector<Vec> pieces;
  if (modified) pieces = g.modified_pieces_f();
  else pieces = convert_all<double>(g.pieces());
  const auto core = delta_core<double>(g.generators_f(), pieces, mu, n, tol);
  DeltaPrimeResult out;
  out.status = core.status;
  out.value = core.status == DeltaStatus::infinite ? kInf : core.minus_infinity ? -kInf : core.value;
  out.witness = core.witness;
  out.certificate = core.certificate;
  return out;
}

DeltaPrimeExact delta_prime_exact(const GrowthModel& g, const RatVec& mu, bool modified) {
  const std::size_t n = g.root_system().rank();
  if (mu.size() != n) throw InputError("covector has wrong dimension");
  if (is_zero(mu)) throw InputError("delta' is undefined for mu = 0");
  const auto core = delta_core<Rational>(g.cone().generators, modified ? g.modified_pieces() : g.pieces(), mu, n, 0);
  if (core.status == DeltaStatus::nonpositive && core.minus_infinity)
    throw PreconditionFailure("mu vanishes on the cone; delta' is -infinity");
  DeltaPrimeExact out;
  out.status = core.status;
  out.value = core.value;
  out.witness = core.witness;
  return out;
}

Sandwich exponent_sandwich(const GrowthModel& g, const Vec& mu, double tol) {
  Sandwich s;
  s.delta_prime = delta_prime(g, mu, true, tol).value;
  s.delta = delta_prime(g, mu, false, tol).value;
  const auto& gens = g.generators_f();
  for (const auto& gen : gens)
    if (fdot(mu, gen) <= tol * norm2(gen)) throw PreconditionFailure("mu must be positive on the cone");
  for (int sense : {-1, 1}) {
    LinearProgram<double> lp(gens.size());
    std::vector<double> row;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      row.push_back(fdot(mu, gens[k]));
      lp.objective[k] = sense * fdot(g.rho_f(), gens[k]);
    }
    lp.add_row(row, RowSense::eq, 1);
    const auto r = solve_lp(lp);
    const double v = r.status == LpStatus::unbounded ? kInf : sense * r.value;
    (sense < 0 ? s.inf_rho : s.sup_rho) = v;
  }
  s.lower = s.delta_prime - s.inf_rho;
  s.tight_lower = s.delta_prime + s.inf_rho;
  s.upper = s.delta_prime + s.sup_rho;
  const double slack = tol * std::max(1.0, std::abs(s.delta));
  s.contains = s.lower <= s.delta + slack && s.tight_lower <= s.delta + slack && s.delta <= s.upper + slack;
  return s;
}

TentReport tent_check(const GrowthModel& g, const std::vector<Vec>& mus, std::size_t samples, std::uint64_t seed,
                      double slack) {
  TentReport rep;
  std::mt19937_64 rng(seed);
  std::vector<Vec> points = g.generators_f();
  if (!g.cone().generators.empty())
    for (std::size_t s = 0; s < samples; ++s) {
      Vec v = convert_vec<double>(random_cone_point(g.cone(), rng));
      const double nv = *std::max_element(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
      for (auto& x : v) x /= std::abs(nv);
      points.push_back(v);
    }
  for (const auto& mu : mus) {
    const auto d = delta_prime(g, mu);
    if (d.status == DeltaStatus::infinite || d.value == -kInf) {
      ++rep.vacuous;
      continue;
    }
    for (const auto& v : points) {
      ++rep.checked;
      const double lhs = g.evaluate_modified(v);
      const double rhs = d.value * fdot(mu, v);
      if (lhs > rhs + slack) {
        rep.passed = false;
        rep.failures.push_back("psi' exceeds delta'_mu mu by " + std::to_string(lhs - rhs));
      }
    }
  }
  return rep;
}

std::optional<Rational> limit_set_dim_bound(const GrowthModel& g, const std::vector<std::size_t>& simple_indices) {
  const auto& rs = g.root_system();
  Rational best = 0;
  for (auto a : simple_indices) {
    if (a >= rs.rank()) throw InputError("simple root index out of range");
    const RatVec& alpha = rs.simple_roots()[a];
    for (const auto& gen : g.cone().generators) {
      const Rational d = dot(alpha, gen);
      if (d <= 0) return std::nullopt;
      best = std::max(best, Rational(dot(rs.rho(), gen) / d));
    }
  }
  return best;
}

RatVec random_cone_point(const PolyCone& c, std::mt19937_64& rng, int range) {
  if (c.generators.empty()) return zeros(c.rank);
  std::uniform_int_distribution<int> w(0, range);
  for (;;) {
    RatVec v = zeros(c.rank);
    for (const auto& g : c.generators) v = v + Rational(w(rng)) * g;
    if (!is_zero(v)) return v;
  }
}

}  // namespace weylgrowth
