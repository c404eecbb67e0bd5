#include "weylgrowth/critical.hpp"

#include "weylgrowth/errors.hpp"
#include "weylgrowth/kernels.hpp"
#include "weylgrowth/lp.hpp"
#include "weylgrowth/min_norm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace weylgrowth {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.6180339887498949;

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return out;
}

Vec from_eigen(const Eigen::VectorXd& v) { return Vec(v.data(), v.data() + v.size()); }

Eigen::VectorXd as_eigen(const Vec& v) { return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())); }

double fdot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Row-major copy of a list of equal-length vectors.
std::vector<double> flatten(const std::vector<Vec>& rows) {
  std::vector<double> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

// Structure-of-arrays copy: coordinate j of point p at [j * count + p].
std::vector<double> to_soa(const std::vector<Vec>& points, std::size_t dim) {
  std::vector<double> soa(points.size() * dim);
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t j = 0; j < dim; ++j) soa[j * points.size() + p] = points[p][j];
  return soa;
}

// All compositions of `total` into `parts` nonnegative integers.
void compositions(std::size_t parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= total; ++a) {
    cur.push_back(a);
    compositions(parts - 1, total - a, cur, out);
    cur.pop_back();
  }
}

double binom(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

// max of psi' over unit vectors of L, by a simplex grid on the generators
void sphere_grid_max(const GrowthModel& g, DeltaPrimeMax& out) {
  const auto& rs = g.root_system();
  const auto& gens = g.generators_f();
  const std::size_t n = rs.rank();
  const std::size_t k = gens.size();
  int res = 1;
  while (binom(static_cast<std::size_t>(res + 1) + k - 1, k - 1) <= 2e5 && res < 100000) ++res;
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(k, res, cur, comps);
  std::vector<Vec> points;
  points.reserve(comps.size());
  for (const auto& c : comps) {
    Vec v(n, 0.0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) v[j] += c[i] * gens[i][j];
    const double nv = vector_norm(rs, v);
    if (nv == 0) continue;
    for (auto& x : v) x /= nv;
    points.push_back(std::move(v));
  }
  const auto soa = to_soa(points, n);
  const auto pieces = flatten(g.modified_pieces_f());
  std::vector<double> vals(points.size());
  kernels::min_affine(soa.data(), points.size(), n, pieces.data(), g.modified_pieces_f().size(), vals.data());
  const auto best = std::max_element(vals.begin(), vals.end()) - vals.begin();
  out.delta_prime = vals[static_cast<std::size_t>(best)];
  out.v_gamma = points[static_cast<std::size_t>(best)];
}

}  // namespace

Vec to_doubles_vec(const RatVec& v) { return to_doubles(v); }

double covector_norm(const RootSystem& rs, const Vec& mu) {
  const auto q = to_eigen(rs.inner_product());
  const auto m = as_eigen(mu);
  return std::sqrt(m.dot(q * m));
}

double vector_norm(const RootSystem& rs, const Vec& v) {
  const auto h = to_eigen(rs.vector_form());
  const auto x = as_eigen(v);
  return std::sqrt(x.dot(h * x));
}

DeltaPrimeMax solve_delta_prime_max(const GrowthModel& g, const SolverConfig& cfg) {
  const auto& rs = g.root_system();
  const std::size_t n = rs.rank();
  DeltaPrimeMax out;
  out.mu_gamma.assign(n, 0.0);
  const auto& gens = g.generators_f();
  if (gens.empty()) {
    out.delta_prime = -kInf;
    out.polyhedron_empty = true;
    return out;
  }
  if (modified_limit_cone(g).empty) {
    out.polyhedron_empty = true;
    sphere_grid_max(g, out);
    return out;
  }

  // feasible start in P from an LP over generator weights
  const auto& pieces = g.modified_pieces_f();
  LinearProgram<double> lp(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) lp.objective[k] = -1;
  for (const auto& p : pieces) {
    Vec row;
    for (const auto& gen : gens) row.push_back(fdot(p, gen));
    lp.add_row(row, RowSense::ge, 1);
  }
  const auto start = solve_lp(lp, static_cast<std::size_t>(cfg.max_iter));
  if (start.status != LpStatus::optimal) throw std::runtime_error("could not find a point of P");
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < gens.size(); ++k) x0 += start.x[k] * as_eigen(gens[k]);

  const auto& hs = g.cone().halfspaces;
  const Eigen::Index m = static_cast<Eigen::Index>(hs.size() + pieces.size());
  Eigen::MatrixXd a(m, static_cast<Eigen::Index>(n));
  Eigen::VectorXd b(m);
  Eigen::Index r = 0;
  for (const auto& h : hs) {
    a.row(r) = as_eigen(to_doubles(h)).transpose();
    b(r++) = 0;
  }
  for (const auto& p : pieces) {
    a.row(r) = as_eigen(p).transpose();
    b(r++) = 1;
  }
  const Eigen::MatrixXd hmat = to_eigen(rs.vector_form());
  const auto res = min_norm_point(hmat, a, b, x0, cfg.max_iter, 1e-12);
  if (!res.converged) throw std::runtime_error("min-norm projection did not converge");
  const double nrm = std::sqrt(res.x.dot(hmat * res.x));
  out.iterations = res.iterations;
  out.delta_prime = 1.0 / nrm;
  const Eigen::VectorXd v = res.x / nrm;
  out.v_gamma = from_eigen(v);
  out.mu_gamma = from_eigen(out.delta_prime * (hmat * v));
  return out;
}

RouteB solve_mu_gamma_minimization(const GrowthModel& g, const SolverConfig& cfg) {
  const auto& rs = g.root_system();
  const std::size_t n = rs.rank();
  RouteB out;
  out.mu_gamma.assign(n, 0.0);
  if (g.cone().generators.empty() || modified_limit_cone(g).empty) {
    out.converged = true;
    return out;
  }
  // 1/delta'_mu = min over P of mu, attained at a vertex of P
  std::vector<RatVec> a = g.cone().halfspaces;
  std::vector<Rational> b(a.size(), Rational(0));
  for (const auto& p : g.modified_pieces()) {
    a.push_back(p);
    b.push_back(1);
  }
  std::vector<Vec> vertices;
  for (const auto& v : polyhedron_vertices(n, a, b)) vertices.push_back(to_doubles(v));
  if (vertices.empty()) throw std::runtime_error("P has no vertices");
  const auto soa = to_soa(vertices, n);

  std::vector<Vec> dirs;
  const auto& w = rs.fundamental_weights();
  const auto& perm = rs.opposition_permutation();
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] < i) continue;
    Vec u = to_doubles(w[i] + w[perm[i]]);
    const double nu = covector_norm(rs, u);
    for (auto& x : u) x /= nu;
    dirs.push_back(std::move(u));
  }
  const std::size_t k = dirs.size();
  std::vector<double> vals(vertices.size());
  auto mu_of = [&](const Vec& c) {
    Vec mu(n, 0.0);
    for (std::size_t d = 0; d < k; ++d)
      for (std::size_t j = 0; j < n; ++j) mu[j] += c[d] * dirs[d][j];
    return mu;
  };
  auto objective = [&](const Vec& c) {
    ++out.evaluations;
    const Vec mu = mu_of(c);
    kernels::dot_all(soa.data(), vertices.size(), n, mu.data(), vals.data());
    const double m = *std::min_element(vals.begin(), vals.end());
    if (!(m > 0)) return kInf;
    return covector_norm(rs, mu) / m;
  };

  const int grid = std::max(3, cfg.multi_start);
  double widest = 0;
  // minimize over {c >= 0, sum c = mass} for the coordinates from `level` on
  std::function<double(std::size_t, double, Vec&)> search = [&](std::size_t level, double mass, Vec& c) -> double {
    if (level + 1 == k) {
      c[level] = mass;
      return objective(c);
    }
    auto eval = [&](double t, Vec& cc) {
      cc[level] = t;
      return search(level + 1, mass - t, cc);
    };
    Vec best_c = c;
    double best = kInf;
    std::size_t best_i = 0;
    for (int i = 0; i < grid; ++i) {
      Vec cc = c;
      const double t = mass * i / (grid - 1);
      const double f = eval(t, cc);
      if (f < best) {
        best = f;
        best_c = cc;
        best_i = static_cast<std::size_t>(i);
      }
    }
    double lo = mass * static_cast<double>(best_i == 0 ? 0 : best_i - 1) / (grid - 1);
    double hi = mass * static_cast<double>(std::min<std::size_t>(best_i + 1, static_cast<std::size_t>(grid - 1))) / (grid - 1);
    Vec ca = c, cb = c;
    double xa = hi - kGolden * (hi - lo), xb = lo + kGolden * (hi - lo);
    double fa = eval(xa, ca), fb = eval(xb, cb);
    int it = 0;
    while (hi - lo > 1e-13 * std::max(1.0, mass) && it++ < cfg.max_iter) {
      if (fa < fb) {
        if (fa < best) { best = fa; best_c = ca; }
        hi = xb;
        xb = xa;
        fb = fa;
        cb = ca;
        xa = hi - kGolden * (hi - lo);
        ca = c;
        fa = eval(xa, ca);
      } else {
        if (fb < best) { best = fb; best_c = cb; }
        lo = xa;
        xa = xb;
        fa = fb;
        ca = cb;
        xb = lo + kGolden * (hi - lo);
        cb = c;
        fb = eval(xb, cb);
      }
    }
    if (fa < best) { best = fa; best_c = ca; }
    if (fb < best) { best = fb; best_c = cb; }
    widest = std::max(widest, (hi - lo) / std::max(1.0, mass));
    c = best_c;
    return best;
  };
  Vec c(k, 0.0);
  out.objective = search(0, 1.0, c);
  out.bracket = widest;
  out.converged = std::isfinite(out.objective) && widest <= 1e-10;
  if (!std::isfinite(out.objective)) return out;
  Vec mu = mu_of(c);
  const double nm = covector_norm(rs, mu);
  for (auto& x : mu) x /= nm;
  out.direction = mu;
  kernels::dot_all(soa.data(), vertices.size(), n, mu.data(), vals.data());
  const double m = *std::min_element(vals.begin(), vals.end());
  for (std::size_t j = 0; j < n; ++j) out.mu_gamma[j] = mu[j] / m;
  return out;
}

double theta_mu(const RootSystem& rs, const Vec& mu_gamma, const Vec& mu) {
  double best = -kInf;
  bool any = false;
  for (const auto& ray : rs.chamber_rays()) {
    const Vec v = to_doubles(ray);
    const double den = fdot(mu, v);
    const double num = fdot(mu_gamma, v);
    double scale = 0;
    for (std::size_t j = 0; j < v.size(); ++j) scale += std::abs(v[j]) * (std::abs(mu[j]) + std::abs(mu_gamma[j]));
    if (den <= 1e-12 * scale) {
      if (num > 1e-9 * std::max(scale, 1.0)) return kInf;
      continue;
    }
    best = std::max(best, num / den);
    any = true;
  }
  return any ? best : 0.0;
}

std::optional<Rational> theta_mu_exact(const RootSystem& rs, const RatVec& mu_gamma, const RatVec& mu) {
  std::optional<Rational> best;
  for (const auto& v : rs.chamber_rays()) {
    const Rational den = dot(mu, v);
    const Rational num = dot(mu_gamma, v);
    if (den <= 0) {
      if (num > 0) return std::nullopt;
      continue;
    }
    const Rational r = num / den;
    if (!best || r > *best) best = r;
  }
  return best ? best : std::optional<Rational>(Rational(0));
}

CriticalData solve_critical(const GrowthModel& g, const SolverConfig& cfg) {
  const auto& rs = g.root_system();
  CriticalData out;
  const auto a = solve_delta_prime_max(g, cfg);
  out.delta_prime_max = a.delta_prime;
  out.v_gamma = a.v_gamma;
  out.mu_gamma = a.mu_gamma;
  const auto b = solve_mu_gamma_minimization(g, cfg);
  out.mu_gamma_b = b.mu_gamma;
  out.route_b_converged = b.converged;
  Vec diff(out.mu_gamma.size());
  for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = out.mu_gamma[j] - out.mu_gamma_b[j];
  const double na = covector_norm(rs, out.mu_gamma);
  const double nd = covector_norm(rs, diff);
  out.route_gap = na > 0 ? nd / na : nd;
  for (const auto& w : rs.fundamental_weights()) out.theta_omega.push_back(theta_mu(rs, out.mu_gamma, to_doubles(w)));
  return out;
}

}  // namespace weylgrowth
