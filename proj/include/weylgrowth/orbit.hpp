#pragma once

// Cartan projections of word balls in finitely generated matrix groups.
//
// Ambients: "sl<n>r" (SL(n,R), 2 <= n <= 6) and "sl2r^<k>" (a product of k
// copies of SL(2,R), k <= 3, generators given as block-diagonal 2k x 2k matrices).

#include "weylgrowth/root_system.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace weylgrowth {

using Vec = std::vector<double>;

struct MatrixGroupSpec {
  std::string ambient = "sl3r";
  std::vector<Eigen::MatrixXd> generators;
  int max_word_length = 10;
  double dedupe_tolerance = 1e-10;  // relative to the largest entry
  bool semigroup = false;  // positive words only, no inverses
  std::size_t cap = 1000000;
};

struct Ambient {
  std::string name;
  std::size_t matrix_size = 0;
  std::size_t blocks = 1;      // SL(2) factors for a product ambient, else 1
  std::size_t block_size = 0;  // size of each diagonal block
  RootSystem root_system;
};
/// InputError on an unknown or unsupported ambient.
Ambient parse_ambient(const std::string& name);

struct CartanPoint {
  Vec ambient;  // log singular values, decreasing within each block
  Vec coords;   // the same point as a vector of a in root-system coordinates
  int length = 0;
  std::vector<std::uint8_t> word;  // letters: generator k is 2k, its inverse 2k+1
};

struct CartanSample {
  std::string ambient;
  std::size_t rank = 0;
  std::vector<CartanPoint> points;
  std::size_t dropped = 0;  // products that overflowed or became singular
  std::size_t merged = 0;   // words that repeated an element already seen
};

/// Letters after normalizing generators to determinant one; InputError if a
/// generator is singular, has negative determinant, or has the wrong size.
std::vector<Eigen::MatrixXd> normalized_letters(const MatrixGroupSpec& spec, const Ambient& amb);

/// Breadth-first enumeration of reduced words up to max_word_length. Each group
/// element is kept once, at its shortest word. CapExceeded past spec.cap words.
CartanSample enumerate_orbit(const MatrixGroupSpec& spec);

/// Product of the letters of a word.
Eigen::MatrixXd word_matrix(const std::vector<Eigen::MatrixXd>& letters, const std::vector<std::uint8_t>& word);
/// Sorted log singular values per block of a (block-diagonal) matrix. The lower
/// half of each block comes from the inverse, which keeps it accurate when the
/// condition number is beyond double precision.
Vec cartan_projection(const Ambient& amb, const Eigen::MatrixXd& m, const Eigen::MatrixXd& inv);
Vec cartan_projection(const Ambient& amb, const Eigen::MatrixXd& m);
/// Cartan projection of a word, with the inverse formed from the inverse word.
Vec cartan_of_word(const Ambient& amb, const std::vector<Eigen::MatrixXd>& letters, const std::vector<std::uint8_t>& word);
/// Root-system coordinates alpha_i(x) of an ambient Cartan point.
Vec root_coordinates(const Ambient& amb, const Vec& ambient);
/// iota on ambient Cartan points: -reverse within each block.
Vec opposition_ambient(const Ambient& amb, const Vec& ambient);

struct EmpiricalCone {
  std::vector<Vec> generators;  // unit directions in root coordinates
  std::size_t points = 0;       // sample points beyond the radius cut
  bool collinear = false;       // all directions within 1e-9 of one ray
  double width_degrees = 0;     // angular width in rank 2
  double chamber_degrees = 0;   // angle of the Weyl chamber in rank 2
  std::vector<double> facet_margin;  // min of alpha over the unit directions, per simple root
  std::vector<bool> avoids_facet;    // facet_margin > 1e-9
};
/// InputError when no point has norm >= radius_cut.
EmpiricalCone empirical_limit_cone(const CartanSample& s, double radius_cut);

struct ExponentEstimate {
  double slope = 0;
  double band = 0;  // two standard errors of the fitted slope
  double t_low = 0;
  double t_high = 0;
  std::size_t points = 0;
  const char* label = "estimate, not a certified abscissa";
};
/// Slope of log #{mu(x) <= T} against T over the top `fraction` of [min, T_complete],
/// where T_complete is the smallest mu value among the longest words.
/// mu is a covector in root-system coordinates. InputError with fewer than
/// `min_points` points or a spread of mu below 3.
ExponentEstimate estimate_exponent(const CartanSample& s, const Vec& mu, double fraction = 0.5,
                                   std::size_t min_points = 1000);

struct SymmetryReport {
  std::size_t checked = 0;
  std::size_t missing = 0;  // inverses absent from the sample
  double max_defect = 0;    // |x(g^-1) - iota x(g)|
};
/// Compares each point of word length <= max_length with the point of its inverse.
SymmetryReport iota_symmetry(const MatrixGroupSpec& spec, const CartanSample& s, int max_length);

/// max of |mu(gh)| - |mu(g)| - |mu(h)| over random pairs of sample elements.
double subadditivity_defect(const MatrixGroupSpec& spec, const CartanSample& s, std::size_t pairs,
                            std::uint64_t seed);

}  // namespace weylgrowth
