#include "weylgrowth/verify.hpp"

#include "weylgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace weylgrowth {

namespace {

double fdot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string str(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

void require_hermitian_dominant(const RootSystem& rs, const RatVec& mu) {
  if (mu.size() != rs.rank()) throw InputError("covector has wrong dimension");
  if (!is_dominant(rs, mu)) throw PreconditionFailure("mu is not dominant");
  if (apply_opposition(rs, mu) != mu) throw PreconditionFailure("mu is not iota-invariant");
}

void require_index(const RootSystem& rs, std::size_t alpha) {
  if (alpha >= rs.rank()) throw InputError("simple root index out of range");
}

// iota(alpha) + alpha as a covector
RatVec alpha_plus_iota(const RootSystem& rs, std::size_t alpha) {
  const auto& pi = rs.simple_roots();
  return pi[alpha] + pi[rs.opposition_permutation()[alpha]];
}

RatVec random_chamber_vector(const RootSystem& rs, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(0, range);
  for (;;) {
    RatVec v = zeros(rs.rank());
    for (const auto& r : rs.chamber_rays()) v = v + Rational(d(rng)) * r;
    if (!is_zero(v)) return v;
  }
}

RatVec random_dominant(const RootSystem& rs, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(0, range);
  RatVec mu = zeros(rs.rank());
  for (const auto& w : rs.fundamental_weights()) mu = mu + Rational(d(rng)) * w;
  return mu;
}

Vec unit(const RootSystem& rs, Vec v) {
  const double n = vector_norm(rs, v);
  if (n > 0)
    for (auto& x : v) x /= n;
  return v;
}

}  // namespace

RatVec wall_direction(const RootSystem& rs, std::size_t alpha) {
  require_index(rs, alpha);
  const auto& w = rs.fundamental_weights();
  return w[alpha] + w[rs.opposition_permutation()[alpha]];
}

RatVec random_hermitian_dominant(const RootSystem& rs, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(0, range);
  const auto& perm = rs.opposition_permutation();
  RatVec mu = zeros(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (perm[i] < i) continue;
    mu = mu + Rational(d(rng)) * wall_direction(rs, i);
  }
  return mu;
}

KeyLemmaVerdict check_keylemma(const RootSystem& rs, const RatVec& mu, std::size_t alpha) {
  require_index(rs, alpha);
  require_hermitian_dominant(rs, mu);
  const RatVec lambda = wall_direction(rs, alpha);
  const auto& w = rs.fundamental_weights();
  const Rational at_alpha = rs.form(mu, w[alpha]) / rs.form(lambda, w[alpha]);
  KeyLemmaVerdict out;
  out.hypothesis = true;
  for (const auto& wb : w)
    if (rs.form(mu, wb) / rs.form(lambda, wb) > at_alpha) out.hypothesis = false;
  out.conclusion = nonneg_multiple(lambda, mu, &out.factor);
  return out;
}

PosOfWeightVerdict check_posofweight(const RootSystem& rs, const RatVec& mu, std::size_t alpha) {
  require_index(rs, alpha);
  require_hermitian_dominant(rs, mu);
  const auto& a = rs.simple_roots()[alpha];
  const auto& w = rs.fundamental_weights()[alpha];
  const RatVec s = alpha_plus_iota(rs, alpha);
  PosOfWeightVerdict out;
  out.lhs = rs.form(mu, a);
  out.rhs = rs.form(mu, w) / rs.form(w, s) * rs.form(a, s);
  return out;
}

Face argmax_face(const RootSystem& rs, const RatVec& mu, const RatVec& lambda) {
  const auto& rays = rs.chamber_rays();
  std::vector<Rational> ratio;
  for (const auto& v : rays) {
    const Rational den = dot(lambda, v);
    if (den <= 0) throw PreconditionFailure("lambda is not positive on the extremal rays");
    ratio.push_back(dot(mu, v) / den);
  }
  Face out;
  out.max_ratio = *std::max_element(ratio.begin(), ratio.end());
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (ratio[i] == out.max_ratio) {
      out.rays.push_back(i);
      out.generators.push_back(rays[i]);
    }
  out.whole_chamber = out.rays.size() == rays.size();
  return out;
}

Rational replay_t(const RootSystem& rs, const RatVec& mu, std::size_t alpha) {
  require_index(rs, alpha);
  const auto& a = rs.simple_roots()[alpha];
  const auto& w = rs.fundamental_weights()[alpha];
  const RatVec s = alpha_plus_iota(rs, alpha);
  const Rational t1 = rs.form(mu, a) / rs.form(a, s);
  const Rational t2 = frac(99, 100) * rs.form(mu, w) / rs.form(w, s);
  return std::min(t1, t2);
}

const char* to_string(ReplayStatus s) {
  switch (s) {
    case ReplayStatus::verified: return "verified";
    case ReplayStatus::hypothesis_failed: return "hypothesis_failed";
    case ReplayStatus::premise_failed: return "premise_failed";
    case ReplayStatus::implication_violated: return "implication_violated";
  }
  return "?";
}

const char* describe(ReplayStatus s) {
  switch (s) {
    case ReplayStatus::verified: return "theorem instance verified";
    case ReplayStatus::hypothesis_failed: return "facet not avoided";
    case ReplayStatus::premise_failed: return "not realizable under the spectral identity";
    case ReplayStatus::implication_violated: return "premise holds but conclusion fails";
  }
  return "?";
}

OneWallReport deduce_onewall(const GrowthModel& g, const PolyCone& cone, std::size_t alpha,
                             const SolverConfig& cfg) {
  return deduce_onewall(g, cone, alpha, solve_critical(g, cfg), cfg);
}

OneWallReport deduce_onewall(const GrowthModel& g, const PolyCone& cone, std::size_t alpha, const CriticalData& crit,
                             const SolverConfig& cfg) {
  const auto& rs = g.root_system();
  OneWallReport out;
  out.alpha = alpha;
  out.hypothesis = avoids_facet(rs, cone, alpha);
  out.mu_gamma = crit.mu_gamma;
  const RatVec lambda = wall_direction(rs, alpha);
  out.direction = to_doubles(lambda);
  out.theta = theta_mu(rs, out.mu_gamma, out.direction);
  const auto dp = delta_prime(g, out.direction, true, cfg.tolerance);
  out.delta_prime = dp.value;
  const double scale = std::max(1.0, std::abs(out.theta));
  out.premise = std::max(0.0, out.delta_prime) >= out.theta - 1e-6 * scale;

  const double ll = std::pow(covector_norm(rs, out.direction), 2);
  const auto q = rs.inner_product();
  double ml = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) ml += out.mu_gamma[i] * q(i, j).get_d() * out.direction[j];
  Vec resid(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) resid[i] = out.mu_gamma[i] - ml / ll * out.direction[i];
  out.conclusion = ml >= 0 && covector_norm(rs, resid) <= 1e-6 * std::max(1.0, covector_norm(rs, out.mu_gamma));

  if (!out.hypothesis) out.status = ReplayStatus::hypothesis_failed;
  else if (!out.premise) out.status = ReplayStatus::premise_failed;
  else if (!out.conclusion) out.status = ReplayStatus::implication_violated;
  else out.status = ReplayStatus::verified;
  return out;
}

bool twowalls_noncollinear(const RootSystem& rs, std::size_t alpha, std::size_t beta) {
  require_index(rs, alpha);
  require_index(rs, beta);
  if (alpha == beta || beta == rs.opposition_permutation()[alpha])
    throw InputError("the two walls must satisfy beta != alpha != iota beta");
  return !collinear(wall_direction(rs, alpha), wall_direction(rs, beta));
}

TwoWallsReport deduce_twowalls(const GrowthModel& g, const PolyCone& cone, std::size_t alpha, std::size_t beta,
                               const SolverConfig& cfg) {
  TwoWallsReport out;
  out.noncollinear = twowalls_noncollinear(g.root_system(), alpha, beta);
  const auto crit = solve_critical(g, cfg);
  out.first = deduce_onewall(g, cone, alpha, crit, cfg);
  out.second = deduce_onewall(g, cone, beta, crit, cfg);
  out.contradiction = out.first.hypothesis && out.second.hypothesis && out.first.premise && out.second.premise &&
                      crit.delta_prime_max > 0;
  return out;
}

WallBound bound_wall_avoided(const RootSystem& rs, std::size_t alpha) {
  WallBound out;
  out.direction = wall_direction(rs, alpha);
  const RatVec gap = rs.rho() - strongly_orthogonal_theta(rs).theta;
  bool first = true;
  for (const auto& v : rs.chamber_rays()) {
    const Rational num = dot(gap, v);
    if (num < 0) throw PreconditionFailure("rho - Theta is negative on an extremal ray");
    const Rational den = dot(out.direction, v);
    if (den <= 0) continue;
    const Rational r = num / den;
    if (first || r < out.c_raw) out.c_raw = r;
    first = false;
  }
  out.primitive_direction = primitive(out.direction);
  Rational scale;
  nonneg_multiple(out.primitive_direction, out.direction, &scale);
  out.c = out.c_raw * scale;
  out.bound = rs.rho() + out.c_raw * out.direction;
  return out;
}

PsiLinearReport check_psilinear(const GrowthModel& g, std::size_t samples, std::uint64_t seed, double tol,
                                const SolverConfig& cfg) {
  const auto& rs = g.root_system();
  const auto a = solve_delta_prime_max(g, cfg);
  const Vec& mu = a.mu_gamma;
  PsiLinearReport out;
  const auto& q = rs.inner_product();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const Vec a = to_doubles(rs.simple_roots()[i]);
    double pairing = 0;
    for (std::size_t r = 0; r < a.size(); ++r)
      for (std::size_t c = 0; c < a.size(); ++c) pairing += mu[r] * q(r, c).get_d() * a[c];
    if (pairing > 1e-8) out.support.push_back(i);
  }

  std::mt19937_64 rng(seed);
  auto excess = [&](const Vec& v) {
    const Vec u = unit(rs, v);
    out.max_excess = std::max(out.max_excess, g.evaluate_modified(u) - fdot(mu, u));
  };
  for (const auto& gen : g.generators_f()) excess(gen);
  for (std::size_t k = 0; k < samples; ++k) excess(to_doubles(random_cone_point(g.cone(), rng)));
  out.unconditional_holds = out.max_excess <= tol;

  if (out.support.empty()) return out;
  const auto& rays = rs.chamber_rays();
  const auto& perm = rs.opposition_permutation();
  std::vector<RatVec> dirs;
  for (auto i : out.support) dirs.push_back(rays[i] + rays[perm[i]]);
  std::uniform_int_distribution<int> d(0, 6);
  for (std::size_t k = 0; k < samples + dirs.size(); ++k) {
    RatVec v = zeros(rs.rank());
    if (k < dirs.size()) v = dirs[k];
    else
      for (const auto& u : dirs) v = v + Rational(d(rng)) * u;
    if (is_zero(v)) continue;
    ++out.samples;
    const Vec u = unit(rs, to_doubles(v));
    if (!g.contains(u, 1e-12)) {
      ++out.outside_cone;
      continue;
    }
    const double gap = fdot(mu, u) - g.evaluate_modified(u);
    out.max_gap = std::max(out.max_gap, gap);
    if (std::abs(gap) <= tol * std::max(1.0, std::abs(fdot(mu, u)))) ++out.equal;
  }
  out.equality_holds = out.outside_cone == 0 && out.equal == out.samples;
  return out;
}

std::vector<B3Row> reproduce_b3_remark(std::size_t samples, std::uint64_t seed) {
  const auto rs = build_root_system("b3");
  const auto& w = rs.fundamental_weights();
  std::vector<RatVec> mus = {{3, 2, 1}, {1, 0, 0}, {1, 1, 1}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, 12);
  while (mus.size() < 3 + samples) {
    const Rational m3 = frac(d(rng), 4), m2 = m3 + frac(d(rng), 4), m1 = m2 + frac(d(rng), 4);
    if (m1 != 0) mus.push_back({m1, m2, m3});
  }
  std::vector<B3Row> rows;
  for (const auto& mu : mus) {
    B3Row r;
    r.mu = mu;
    for (int i = 0; i < 3; ++i) r.theta[i] = *theta_mu_exact(rs, mu, w[static_cast<std::size_t>(i)]);
    r.theta3_sum_normalized = *theta_mu_exact(rs, mu, RatVec{1, 1, 1});
    const Rational sum = mu[0] + mu[1] + mu[2];
    r.closed_form[0] = sum;
    r.closed_form[1] = std::max(mu[0], Rational(sum / 2));
    r.closed_form[2] = mu[0];
    r.matches = r.theta[0] == r.closed_form[0] && r.theta[1] == r.closed_form[1] &&
                r.theta3_sum_normalized == r.closed_form[2] && r.theta[2] == 2 * r.closed_form[2];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ConsistencyRow> consistency_check(const GrowthModel& g, const CriticalData& crit, double tol) {
  const auto& rs = g.root_system();
  std::vector<ConsistencyRow> rows;
  const auto& perm = rs.opposition_permutation();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (perm[i] < i) continue;
    ConsistencyRow r;
    r.alpha = i;
    const Vec lambda = to_doubles(wall_direction(rs, i));
    r.theta = theta_mu(rs, crit.mu_gamma, lambda);
    r.delta_prime = delta_prime(g, lambda).value;
    r.holds = std::abs(r.theta - std::max(0.0, r.delta_prime)) <= tol * std::max(1.0, std::abs(r.theta));
    rows.push_back(r);
  }
  return rows;
}

std::vector<SuiteReport> run_lemma_suite(const std::string& preset, std::size_t samples, std::uint64_t seed) {
  const auto rs = build_root_system(preset);
  const std::size_t n = rs.rank();
  const auto& perm = rs.opposition_permutation();
  std::mt19937_64 rng(seed);
  std::vector<SuiteReport> out;
  auto report = [&](const char* lemma) {
    SuiteReport r;
    r.lemma = lemma;
    r.preset = preset;
    return r;
  };

  {
    SuiteReport r = report("keylemma");
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> scale(0, 5);
    for (std::size_t k = 0; k < samples; ++k) {
      const std::size_t a = pick(rng);
      // every fourth sample is a multiple of the wall direction so the hypothesis is exercised
      RatVec mu = k % 4 == 0 ? Rational(scale(rng)) * wall_direction(rs, a) : random_hermitian_dominant(rs, rng);
      const auto v = check_keylemma(rs, mu, a);
      ++r.samples;
      if (!v.passed()) r.failures.push_back("mu=" + str(mu) + " alpha=" + std::to_string(a));
    }
    out.push_back(std::move(r));
  }
  {
    SuiteReport r = report("posofweight");
    for (std::size_t k = 0; k < samples; ++k) {
      const RatVec mu = random_hermitian_dominant(rs, rng);
      for (std::size_t a = 0; a < n; ++a)
        if (!check_posofweight(rs, mu, a).holds()) r.failures.push_back("mu=" + str(mu) + " alpha=" + std::to_string(a));
      ++r.samples;
    }
    out.push_back(std::move(r));
  }
  {
    SuiteReport r = report("positivity");
    for (std::size_t k = 0; k < samples; ++k) {
      const RatVec u = random_dominant(rs, rng, 6);
      const auto res = lemma_positivity(rs.inner_product(), rs.simple_roots(), u);
      ++r.samples;
      if (!res.all_nonnegative) r.failures.push_back("u=" + str(u));
    }
    out.push_back(std::move(r));
  }
  {
    SuiteReport r = report("rightangles");
    for (std::size_t k = 0; k < samples; ++k) {
      const RatVec v = random_chamber_vector(rs, rng, 6), w = random_chamber_vector(rs, rng, 6);
      ++r.samples;
      if (!(bilinear(rs.vector_form(), v, w) > 0)) r.failures.push_back("v=" + str(v) + " w=" + str(w));
    }
    out.push_back(std::move(r));
  }
  {
    SuiteReport r = report("twowalls");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || b == perm[a]) continue;
        ++r.samples;
        if (!twowalls_noncollinear(rs, a, b))
          r.failures.push_back("alpha=" + std::to_string(a) + " beta=" + std::to_string(b));
      }
    out.push_back(std::move(r));
  }
  {
    SuiteReport r = report("argmax_face");
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> d(0, 6);
    for (std::size_t k = 0; k < samples; ++k) {
      const std::size_t a = pick(rng);
      const RatVec mu = random_hermitian_dominant(rs, rng) + wall_direction(rs, a);
      const Rational t = replay_t(rs, mu, a);
      const RatVec lambda = mu - t * alpha_plus_iota(rs, a);
      const Face f = argmax_face(rs, mu, lambda);
      ++r.samples;
      std::vector<std::size_t> expect = {a, perm[a]};
      std::sort(expect.begin(), expect.end());
      expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
      bool ok = t > 0 ? f.rays == expect : f.whole_chamber;
      // no point of the chamber beats the face
      RatVec v = zeros(n);
      for (const auto& ray : rs.chamber_rays()) v = v + Rational(d(rng) + 1) * ray;
      if (dot(mu, v) > f.max_ratio * dot(lambda, v)) ok = false;
      if (!ok) r.failures.push_back("mu=" + str(mu) + " alpha=" + std::to_string(a));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SuiteReport> run_replay_suite(const std::string& preset, std::size_t models, std::uint64_t seed,
                                          bool consistency, const SolverConfig& cfg) {
  const auto rs = build_root_system(preset);
  std::mt19937_64 rng(seed);
  auto report = [&](const char* lemma) {
    SuiteReport r;
    r.lemma = lemma;
    r.preset = preset;
    return r;
  };
  SuiteReport tent = report("tent"), onewall = report("onewall"), theta = report("theta_bound"),
              linear = report("psilinear"), identity = report("identity");
  for (std::size_t m = 0; m < models; ++m) {
    const auto g = random_growth_model(rs, rng);
    const auto crit = solve_critical(g, cfg);
    const std::string tag = "model " + std::to_string(m);

    std::vector<Vec> mus;
    for (int k = 0; k < 100; ++k) {
      RatVec mu = random_dominant(rs, rng, 6);
      if (!interior_dual_member(g.cone(), mu)) continue;
      mus.push_back(to_doubles(mu));
    }
    const auto t = tent_check(g, mus, 20, seed + m);
    ++tent.samples;
    for (const auto& f : t.failures) tent.failures.push_back(tag + ": " + f);

    const auto closure = modified_limit_cone(g).closure;
    for (std::size_t a = 0; a < rs.rank(); ++a) {
      const auto rep = deduce_onewall(g, closure, a, crit, cfg);
      ++onewall.samples;
      if (rep.status == ReplayStatus::implication_violated ||
          (consistency && rep.hypothesis && rep.status != ReplayStatus::verified))
        onewall.failures.push_back(tag + " alpha=" + std::to_string(a) + ": " + describe(rep.status));
    }

    for (const auto& row : consistency_check(g, crit)) {
      ++theta.samples;
      if (row.theta < std::max(0.0, row.delta_prime) - 1e-6 * std::max(1.0, row.theta))
        theta.failures.push_back(tag + " alpha=" + std::to_string(row.alpha) + ": theta below max(0, delta')");
      if (consistency) {
        ++identity.samples;
        if (!row.holds) identity.failures.push_back(tag + " alpha=" + std::to_string(row.alpha) + ": theta != max(0, delta')");
      }
    }

    const auto lin = check_psilinear(g, 50, seed + m, 1e-8, cfg);
    ++linear.samples;
    if (!lin.unconditional_holds) linear.failures.push_back(tag + ": psi' exceeds mu_Gamma");
    if (consistency && !lin.equality_holds) linear.failures.push_back(tag + ": psi != mu_Gamma + rho on a_I");
  }
  std::vector<SuiteReport> out = {tent, onewall, theta, linear};
  if (consistency) out.push_back(identity);
  return out;
}

}  // namespace weylgrowth
