#pragma once

// Restricted root systems with multiplicities.
//
// Coordinates: a covector lambda in a* and a vector v in a are both stored as
// rank-many rationals, paired by the plain dot product lambda(v) = sum lambda_i v_i.
// The invariant inner product on a* is the matrix Q (inner_product()); the
// induced form on a is Q^{-1}, and the identification a <-> a* sends a vector v
// to the covector Q^{-1} v. Presets in the classical coordinates use Q = I, so
// the two pictures coincide there.

#include "weylgrowth/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weylgrowth {

struct PositiveRoot {
  RatVec coords;                    // covector coordinates
  std::vector<long> simple_coeffs;  // expansion in the simple roots
  int multiplicity = 1;
  bool divisible = false;  // a 2*alpha entry of a non-reduced system
};

/// Element of the Weyl group, acting on covector coordinates.
struct WeylElement {
  RatMatrix matrix;
  std::vector<int> word;  // indices of simple reflections, applied right to left
};

struct MultiplicityEntry {
  RatVec root;
  int m = 1;
};

/// Input for a custom root system.
struct RootSystemData {
  std::vector<RatVec> simple_roots;
  std::vector<MultiplicityEntry> multiplicities;  // unlisted indivisible roots get m = 1
  std::optional<RatMatrix> inner_product;         // form on a*; identity when absent
  std::string label = "custom";
};

inline constexpr std::uint64_t kDefaultWeylCap = std::uint64_t{1} << 20;

class RootSystem {
 public:
  static RootSystem build(const RootSystemData& data);

  std::size_t rank() const { return simple_roots_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<RatVec>& simple_roots() const { return simple_roots_; }
  const std::vector<PositiveRoot>& positive_roots() const { return pos_roots_; }
  const RatMatrix& inner_product() const { return form_; }
  const RatMatrix& vector_form() const { return vector_form_; }
  const RootSystemData& source() const { return source_; }

  /// <lambda, mu> on a*.
  Rational form(const RatVec& lambda, const RatVec& mu) const;
  /// The covector <v, .> attached to a vector v.
  RatVec to_covector(const RatVec& vector) const;
  /// The vector attached to a covector.
  RatVec to_vector(const RatVec& covector) const;

  RatVec reflect(std::size_t simple_index, const RatVec& covector) const;
  const RatMatrix& reflection(std::size_t simple_index) const { return reflections_.at(simple_index); }
  /// Matrix of the same Weyl element acting on vector coordinates (Q W Q^{-1}).
  RatMatrix vector_action(const RatMatrix& covector_action) const;

  /// Multiplicity of a root (positive or negative); 0 when not a root.
  int multiplicity(const RatVec& covector) const;
  bool is_root(const RatVec& covector) const { return multiplicity(covector) > 0; }
  bool is_reduced() const;

  /// Irreducible components as lists of simple-root indices.
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  bool irreducible() const { return components_.size() == 1; }
  /// |W| from the classification of each component, without enumeration.
  std::uint64_t predicted_weyl_order() const { return weyl_order_; }

  const RatVec& rho() const { return rho_; }
  const std::vector<RatVec>& fundamental_weights() const { return fundamental_weights_; }
  /// iota = -w0 on covector coordinates.
  const RatMatrix& opposition() const { return opposition_; }
  /// iota(alpha_i) = alpha_{opposition_permutation()[i]}.
  const std::vector<std::size_t>& opposition_permutation() const { return opposition_perm_; }
  const WeylElement& longest_element() const { return longest_; }
  /// Extremal rays of a_+ as primitive integer vectors, indexed like the simple roots.
  const std::vector<RatVec>& chamber_rays() const { return chamber_rays_; }

 private:
  RootSystem() = default;

  std::string label_;
  RootSystemData source_;
  std::vector<RatVec> simple_roots_;
  std::vector<PositiveRoot> pos_roots_;
  RatMatrix form_;
  RatMatrix vector_form_;
  RatMatrix form_inverse_;
  std::vector<RatMatrix> reflections_;
  std::vector<std::vector<std::size_t>> components_;
  std::uint64_t weyl_order_ = 1;
  RatVec rho_;
  std::vector<RatVec> fundamental_weights_;
  RatMatrix opposition_;
  std::vector<std::size_t> opposition_perm_;
  WeylElement longest_;
  std::vector<RatVec> chamber_rays_;
};

/// Presets: a1..a8, b2.., c2.., d3.., g2, f4, e6, e7, e8 (unit multiplicities);
/// sl(n,R|C|H), so(p,q), su(p,q), sp(p,q) with p <= q.
RootSystem build_root_system(std::string_view preset);
std::vector<std::string> preset_examples();

RatVec rho(const RootSystem& rs);
std::vector<WeylElement> weyl_group(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);
RatMatrix opposition_involution(const RootSystem& rs);
std::vector<RatVec> fundamental_weights(const RootSystem& rs);

struct ThetaResult {
  std::vector<RatVec> roots;  // the maximal strongly orthogonal system
  RatVec theta;               // half their sum, no multiplicities
};
/// Highest-root cascade, run per irreducible component on the full set of roots.
ThetaResult strongly_orthogonal_theta(const RootSystem& rs);

struct DominantRepresentative {
  RatVec dominant;
  WeylElement w;  // w(lambda) = dominant
};
DominantRepresentative dominant_representative(const RootSystem& rs, const RatVec& lambda);

bool is_dominant(const RootSystem& rs, const RatVec& covector);
/// Dominant vector: alpha(v) >= 0 for every simple root.
bool is_dominant_vector(const RootSystem& rs, const RatVec& vector);
RatVec apply_opposition(const RootSystem& rs, const RatVec& covector);
/// Opposition involution acting on vectors of a.
RatVec apply_opposition_to_vector(const RootSystem& rs, const RatVec& vector);
/// Coefficients of a covector in the basis of simple roots.
RatVec simple_root_coordinates(const RootSystem& rs, const RatVec& covector);

}  // namespace weylgrowth
