#pragma once

// Piecewise-linear concave models psi = min_i l_i on a polyhedral cone L in a_+,
// and the critical exponents delta_mu / delta'_mu as linear programs over L.

#include "weylgrowth/cone.hpp"
#include "weylgrowth/rational.hpp"
#include "weylgrowth/root_system.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace weylgrowth {

using Vec = std::vector<double>;

class GrowthModel {
 public:
  GrowthModel(RootSystem rs, PolyCone cone, std::vector<RatVec> pieces);

  const RootSystem& root_system() const { return rs_; }
  /// The finiteness cone with both representations and irredundant generators.
  const PolyCone& cone() const { return cone_; }
  const std::vector<RatVec>& pieces() const { return pieces_; }
  /// l_i - rho, the pieces of the modified indicator psi' = psi - rho.
  const std::vector<RatVec>& modified_pieces() const { return modified_; }

  const std::vector<Vec>& generators_f() const { return gens_f_; }
  const std::vector<Vec>& modified_pieces_f() const { return modified_f_; }
  const Vec& rho_f() const { return rho_f_; }

  bool contains(const Vec& v, double tol = 1e-12) const;
  /// psi(v); -infinity outside the cone.
  double evaluate(const Vec& v) const;
  /// psi'(v) = psi(v) - rho(v); -infinity outside the cone.
  double evaluate_modified(const Vec& v) const;
  std::optional<Rational> evaluate_exact(const RatVec& v) const;
  std::optional<Rational> evaluate_modified_exact(const RatVec& v) const;

  /// Structural properties of a growth indicator that fail on this model.
  std::vector<std::string> invariant_violations(std::size_t samples = 1000, std::uint64_t seed = 1) const;
  /// Throws ModelInvariantError listing every violated property.
  void validate(std::size_t samples = 1000, std::uint64_t seed = 1) const;

 private:
  RootSystem rs_;
  PolyCone cone_;
  std::vector<RatVec> pieces_;
  std::vector<RatVec> modified_;
  std::vector<Vec> gens_f_;
  std::vector<Vec> halfspaces_f_;
  std::vector<Vec> pieces_f_;
  std::vector<Vec> modified_f_;
  Vec rho_f_;
};

/// psi = c * rho on the whole chamber (c = 1 gives the tempered bound, c = 2 the trivial one).
GrowthModel rho_multiple_model(const RootSystem& rs, const Rational& c);

struct ModifiedCone {
  PolyCone closure;  // L intersected with {l_i - rho >= 0}, flagged open
  bool empty = true;  // L' = {psi' > 0} is empty
};
ModifiedCone modified_limit_cone(const GrowthModel& g);

enum class DeltaStatus { finite, infinite, nonpositive };
const char* to_string(DeltaStatus s);

struct DeltaPrimeResult {
  DeltaStatus status = DeltaStatus::finite;
  double value = 0;  // +infinity when infinite
  Vec witness;       // maximizer with mu(witness) = 1, when finite
  Vec certificate;   // direction with mu <= 0 and psi' > 0, when infinite
};

/// sup over L of psi'(v)/mu(v) (modified) or psi(v)/mu(v). mu must be nonzero and
/// nonnegative on L.
DeltaPrimeResult delta_prime(const GrowthModel& g, const Vec& mu, bool modified = true, double tol = 1e-9);

struct DeltaPrimeExact {
  DeltaStatus status = DeltaStatus::finite;
  Rational value;
  RatVec witness;
};
DeltaPrimeExact delta_prime_exact(const GrowthModel& g, const RatVec& mu, bool modified = true);

struct Sandwich {
  double delta_prime = 0;
  double delta = 0;
  double inf_rho = 0;  // over {v in L : mu(v) = 1}
  double sup_rho = 0;
  double lower = 0;        // delta' - inf rho
  double tight_lower = 0;  // delta' + inf rho
  double upper = 0;        // delta' + sup rho
  bool contains = false;
};
Sandwich exponent_sandwich(const GrowthModel& g, const Vec& mu, double tol = 1e-9);

struct TentReport {
  bool passed = true;
  std::size_t checked = 0;
  std::size_t vacuous = 0;
  std::vector<std::string> failures;
};
/// psi'(v) <= delta'_mu mu(v) on the generators and on random points of L.
TentReport tent_check(const GrowthModel& g, const std::vector<Vec>& mus, std::size_t samples = 100,
                      std::uint64_t seed = 1, double slack = 1e-8);

/// max over alpha in I of sup_L rho/alpha; nullopt means +infinity.
std::optional<Rational> limit_set_dim_bound(const GrowthModel& g, const std::vector<std::size_t>& simple_indices);

struct RandomModelOptions {
  int generator_count = 3;
  int piece_count = 3;
  int coefficient_range = 4;
  std::size_t max_attempts = 1000;
};
/// Random iota-invariant model with 0 <= psi <= 2 rho on L and delta' > 0.
GrowthModel random_growth_model(const RootSystem& rs, std::mt19937_64& rng, const RandomModelOptions& opt = {});

/// Random point of L as a nonnegative combination of the generators.
RatVec random_cone_point(const PolyCone& c, std::mt19937_64& rng, int range = 6);

}  // namespace weylgrowth
