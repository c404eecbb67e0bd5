#pragma once

// Exact verifiers for the chamber lemmas, replays of the wall-avoidance
// deductions on growth models, and the bound calculators.

#include "weylgrowth/critical.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weylgrowth {

/// omega_alpha + iota omega_alpha
RatVec wall_direction(const RootSystem& rs, std::size_t alpha);

struct KeyLemmaVerdict {
  bool hypothesis = false;  // the ratio at beta never exceeds the ratio at alpha
  bool conclusion = false;  // mu is a nonnegative multiple of omega_alpha + iota omega_alpha
  Rational factor;
  bool passed() const { return !hypothesis || conclusion; }
};
/// mu must be dominant and iota-invariant (PreconditionFailure otherwise).
KeyLemmaVerdict check_keylemma(const RootSystem& rs, const RatVec& mu, std::size_t alpha);

struct PosOfWeightVerdict {
  Rational lhs;  // <mu, alpha>
  Rational rhs;  // <mu, omega_alpha> / <omega_alpha, alpha + iota alpha> * <alpha, alpha + iota alpha>
  bool holds() const { return lhs <= rhs; }
};
PosOfWeightVerdict check_posofweight(const RootSystem& rs, const RatVec& mu, std::size_t alpha);

struct Face {
  std::vector<std::size_t> rays;  // indices into chamber_rays() attaining the max
  std::vector<RatVec> generators;
  Rational max_ratio;
  bool whole_chamber = false;
};
/// Extremal rays of a_+ maximizing mu(v)/lambda(v); lambda must be positive on them.
Face argmax_face(const RootSystem& rs, const RatVec& mu, const RatVec& lambda);

/// t = min(<mu,alpha>/<alpha,alpha+iota alpha>, 99/100 <mu,omega_alpha>/<omega_alpha,alpha+iota alpha>)
Rational replay_t(const RootSystem& rs, const RatVec& mu, std::size_t alpha);

enum class ReplayStatus { verified, hypothesis_failed, premise_failed, implication_violated };
const char* to_string(ReplayStatus s);
const char* describe(ReplayStatus s);

struct OneWallReport {
  std::size_t alpha = 0;
  bool hypothesis = false;  // the tested cone avoids the facet of alpha
  bool premise = false;     // max(0, delta'_lambda) reaches theta_lambda, lambda = omega_alpha + iota omega_alpha
  bool conclusion = false;  // mu_Gamma is collinear with lambda
  double theta = 0;
  double delta_prime = 0;
  Vec mu_gamma;
  Vec direction;
  ReplayStatus status = ReplayStatus::hypothesis_failed;
};
/// `cone` is the cone whose facet avoidance is the hypothesis, usually the closure of L'.
OneWallReport deduce_onewall(const GrowthModel& g, const PolyCone& cone, std::size_t alpha,
                             const SolverConfig& cfg = {});
OneWallReport deduce_onewall(const GrowthModel& g, const PolyCone& cone, std::size_t alpha, const CriticalData& crit,
                             const SolverConfig& cfg = {});

/// omega_alpha + iota omega_alpha and omega_beta + iota omega_beta are not collinear.
/// InputError unless beta differs from alpha and from iota alpha.
bool twowalls_noncollinear(const RootSystem& rs, std::size_t alpha, std::size_t beta);

struct TwoWallsReport {
  OneWallReport first;
  OneWallReport second;
  bool noncollinear = false;
  bool contradiction = false;  // both premises, delta' > 0: the model cannot satisfy the identity
};
TwoWallsReport deduce_twowalls(const GrowthModel& g, const PolyCone& cone, std::size_t alpha, std::size_t beta,
                               const SolverConfig& cfg = {});

struct WallBound {
  RatVec direction;            // omega_alpha + iota omega_alpha
  Rational c_raw;              // min over rays of (rho - Theta)(v) / direction(v)
  RatVec primitive_direction;  // direction scaled to a primitive integer covector
  Rational c;                  // the same coefficient against the primitive direction
  RatVec bound;                // rho + c_raw direction
};
/// PreconditionFailure when rho - Theta is negative on an extremal ray.
WallBound bound_wall_avoided(const RootSystem& rs, std::size_t alpha);

struct PsiLinearReport {
  std::vector<std::size_t> support;  // I = {alpha : <mu_Gamma, alpha> > 1e-8}
  std::size_t samples = 0;
  std::size_t outside_cone = 0;
  std::size_t equal = 0;
  double max_excess = 0;  // max of psi' - mu_Gamma, must be <= tol
  double max_gap = 0;     // max of mu_Gamma - psi' on the a_I samples inside L
  bool unconditional_holds = true;
  bool equality_holds = true;
};
PsiLinearReport check_psilinear(const GrowthModel& g, std::size_t samples = 200, std::uint64_t seed = 1,
                                double tol = 1e-8, const SolverConfig& cfg = {});

struct B3Row {
  RatVec mu;
  Rational theta[3];
  Rational closed_form[3];
  Rational theta3_sum_normalized;  // against e1 + e2 + e3 instead of omega_3
  bool matches = false;
};
/// The three B3 theta values for the fixed rows and for `samples` random dominant mu.
std::vector<B3Row> reproduce_b3_remark(std::size_t samples = 0, std::uint64_t seed = 1);

struct ConsistencyRow {
  std::size_t alpha = 0;
  double theta = 0;
  double delta_prime = 0;
  bool holds = false;  // theta = max(0, delta')
};
/// theta_lambda = max(0, delta'_lambda) for lambda = omega_alpha + iota omega_alpha.
std::vector<ConsistencyRow> consistency_check(const GrowthModel& g, const CriticalData& crit, double tol = 1e-6);

struct SuiteReport {
  std::string lemma;
  std::string preset;
  std::size_t samples = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};
/// keylemma, posofweight, positivity, rightangles, twowalls, argmax_face.
std::vector<SuiteReport> run_lemma_suite(const std::string& preset, std::size_t samples, std::uint64_t seed);
/// Random models: tent property, one-wall replays, theta >= max(0, delta') and
/// psi' <= mu_Gamma; with `consistency` the identity-dependent equalities too.
std::vector<SuiteReport> run_replay_suite(const std::string& preset, std::size_t models, std::uint64_t seed,
                                          bool consistency, const SolverConfig& cfg = {});

/// Random dominant iota-invariant covector with integer omega coordinates in [0, range].
RatVec random_hermitian_dominant(const RootSystem& rs, std::mt19937_64& rng, int range = 6);

}  // namespace weylgrowth
