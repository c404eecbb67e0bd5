#pragma once

// Rank-2 figure: the dominant chamber of a*, conv W(rho - Theta) and, for each
// simple root alpha with a positive wall bound, conv W(c_alpha (omega_alpha + iota omega_alpha)).

#include "weylgrowth/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylgrowth {

struct FigureHull {
  std::string label;
  std::string color;
  std::optional<std::size_t> alpha;  // empty for the rho - Theta hull
  RatVec apex;                       // dominant vertex
  std::vector<RatVec> vertices;      // W-orbit of the apex, counterclockwise
};

struct FigureGeometry {
  std::string preset;
  std::vector<RatVec> chamber_rays;  // fundamental weights
  std::vector<WallBound> bounds;     // one per simple root
  std::vector<FigureHull> hulls;     // rho - Theta first
};
/// InputError unless the root system has rank 2.
FigureGeometry figure_geometry(const RootSystem& rs);

struct HullComparison {
  std::size_t alpha = 0;
  bool coincides = false;    // same vertex set within 1e-9
  double vertex_distance = 0;  // Hausdorff distance between the vertex sets
  bool inside = false;       // every vertex lies in conv W(rho - Theta), exact
};
std::vector<HullComparison> compare_hulls(const RootSystem& rs, const FigureGeometry& g);

/// Euclidean plot coordinates of a covector: |xy| equals the norm on a*.
std::pair<double, double> plot_coordinates(const RootSystem& rs, const RatVec& mu);

/// Deterministic SVG document.
std::string render_svg(const RootSystem& rs, const FigureGeometry& g);

}  // namespace weylgrowth
