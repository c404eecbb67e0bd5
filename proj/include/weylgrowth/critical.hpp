#pragma once

// The critical functional mu_Gamma of a growth model, computed two ways:
// route A projects the origin onto P = {v in L : (l_i - rho)(v) >= 1};
// route B minimizes ||mu|| delta'_mu over iota-invariant dominant mu.

#include "weylgrowth/growth.hpp"

#include <cstdint>
#include <optional>

namespace weylgrowth {

struct SolverConfig {
  double tolerance = 1e-9;
  int max_iter = 10000;
  int multi_start = 32;
  std::uint64_t seed = 0;
};

struct DeltaPrimeMax {
  double delta_prime = 0;  // max of psi' on the unit sphere of a
  Vec v_gamma;             // unit maximizer
  Vec mu_gamma;            // max(0, delta') times the covector of v_gamma
  bool polyhedron_empty = false;
  int iterations = 0;
};
DeltaPrimeMax solve_delta_prime_max(const GrowthModel& g, const SolverConfig& cfg = {});

struct RouteB {
  Vec mu_gamma;
  Vec direction;          // unit minimizer of ||mu|| delta'_mu
  double objective = 0;   // min of ||mu|| delta'_mu, equals delta' at the optimum
  double bracket = 0;     // final golden-section bracket width
  int evaluations = 0;
  bool converged = false;
};
RouteB solve_mu_gamma_minimization(const GrowthModel& g, const SolverConfig& cfg = {});

/// max over a_+ of mu_gamma(v)/mu(v); +infinity when mu vanishes on an extremal ray
/// where mu_gamma is positive.
double theta_mu(const RootSystem& rs, const Vec& mu_gamma, const Vec& mu);
/// Exact variant; nullopt means +infinity.
std::optional<Rational> theta_mu_exact(const RootSystem& rs, const RatVec& mu_gamma, const RatVec& mu);

struct CriticalData {
  double delta_prime_max = 0;
  Vec v_gamma;
  Vec mu_gamma;    // route A, authoritative
  Vec mu_gamma_b;  // route B
  double route_gap = 0;  // ||A - B|| / max(||A||, tiny); 0 when both vanish
  bool route_b_converged = true;
  std::vector<double> theta_omega;  // theta at each fundamental weight
};
CriticalData solve_critical(const GrowthModel& g, const SolverConfig& cfg = {});

/// Norm of a covector under the inner product on a*.
double covector_norm(const RootSystem& rs, const Vec& mu);
/// Norm of a vector of a.
double vector_norm(const RootSystem& rs, const Vec& v);
Vec to_doubles_vec(const RatVec& v);

}  // namespace weylgrowth
