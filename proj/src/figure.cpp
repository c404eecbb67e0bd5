#include "weylgrowth/figure.hpp"

#include "weylgrowth/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace weylgrowth {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

std::vector<RatVec> orbit_hull(const RootSystem& rs, const RatVec& apex) {
  std::vector<RatVec> pts;
  for (const auto& w : weyl_group(rs)) {
    RatVec p = w.matrix * apex;
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  std::vector<std::pair<double, RatVec>> keyed;
  for (auto& p : pts) {
    const auto [x, y] = plot_coordinates(rs, p);
    keyed.emplace_back(std::atan2(y, x), std::move(p));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<RatVec> out;
  for (auto& [angle, p] : keyed) out.push_back(std::move(p));
  return out;
}

std::string apex_label(const RootSystem& rs, std::size_t alpha, const WallBound& b) {
  const std::string i = std::to_string(alpha + 1);
  auto coeff = [](const Rational& q) { return q == 1 ? std::string() : to_string(q) + " "; };
  if (rs.opposition_permutation()[alpha] == alpha) return "conv W(" + coeff(Rational(2) * b.c_raw) + "omega_" + i + ")";
  return "conv W(" + coeff(b.c_raw) + "(omega_" + i + " + iota omega_" + i + "))";
}

}  // namespace

std::pair<double, double> plot_coordinates(const RootSystem& rs, const RatVec& mu) {
  Eigen::Matrix2d q;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) q(i, j) = to_double(rs.inner_product()(i, j));
  const Eigen::Matrix2d l = Eigen::LLT<Eigen::Matrix2d>(q).matrixL();
  const Eigen::Vector2d y = l.transpose() * Eigen::Vector2d(to_double(mu[0]), to_double(mu[1]));
  return {y(0), y(1)};
}

FigureGeometry figure_geometry(const RootSystem& rs) {
  if (rs.rank() != 2) throw InputError("the figure needs a rank-2 root system, got rank " + std::to_string(rs.rank()));
  FigureGeometry g;
  g.preset = rs.label();
  g.chamber_rays = rs.fundamental_weights();
  const RatVec base = rs.rho() - strongly_orthogonal_theta(rs).theta;
  g.hulls.push_back({"conv W(rho - Theta)", "#2e8b3a", std::nullopt, base, orbit_hull(rs, base)});
  static const char* colors[2] = {"#f08c1a", "#8b5a2b"};
  for (std::size_t a = 0; a < 2; ++a) {
    g.bounds.push_back(bound_wall_avoided(rs, a));
    const auto& b = g.bounds.back();
    if (b.c_raw <= 0) continue;
    const RatVec apex = b.c_raw * b.direction;
    g.hulls.push_back({apex_label(rs, a, b), colors[a], a, apex, orbit_hull(rs, apex)});
  }
  return g;
}

std::vector<HullComparison> compare_hulls(const RootSystem& rs, const FigureGeometry& g) {
  const auto& base = g.hulls.front();
  auto dist = [&](const RatVec& p, const std::vector<RatVec>& set) {
    const auto [px, py] = plot_coordinates(rs, p);
    double best = INFINITY;
    for (const auto& s : set) {
      const auto [sx, sy] = plot_coordinates(rs, s);
      best = std::min(best, std::hypot(px - sx, py - sy));
    }
    return best;
  };
  std::vector<HullComparison> out;
  for (const auto& h : g.hulls) {
    if (!h.alpha) continue;
    HullComparison c;
    c.alpha = *h.alpha;
    for (const auto& v : h.vertices) c.vertex_distance = std::max(c.vertex_distance, dist(v, base.vertices));
    for (const auto& v : base.vertices) c.vertex_distance = std::max(c.vertex_distance, dist(v, h.vertices));
    c.coincides = c.vertex_distance <= 1e-9;
    c.inside = std::all_of(h.vertices.begin(), h.vertices.end(),
                           [&](const RatVec& v) { return conv_hull_member(rs, v, base.apex); });
    out.push_back(c);
  }
  return out;
}

std::string render_svg(const RootSystem& rs, const FigureGeometry& g) {
  const double size = 520, center = 260, radius = 200;
  double extent = 0;
  for (const auto& h : g.hulls)
    for (const auto& v : h.vertices) {
      const auto [x, y] = plot_coordinates(rs, v);
      extent = std::max(extent, std::hypot(x, y));
    }
  const double scale = extent > 0 ? radius / extent : 1.0;
  auto px = [&](double x) { return fmt(center + scale * x); };
  auto py = [&](double y) { return fmt(center - scale * y); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 90
    << "\" viewBox=\"0 0 " << size << ' ' << size + 90 << "\">\n";
  s << "<title>Weyl orbit hulls for " << g.preset << "</title>\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // chamber wedge between the two fundamental weight directions
  {
    const auto [x0, y0] = plot_coordinates(rs, g.chamber_rays[0]);
    const auto [x1, y1] = plot_coordinates(rs, g.chamber_rays[1]);
    const double r = (radius + 30) / scale;
    const double n0 = std::hypot(x0, y0), n1 = std::hypot(x1, y1);
    s << "<polygon points=\"" << px(0) << ',' << py(0) << ' ' << px(r * x0 / n0) << ',' << py(r * y0 / n0) << ' '
      << px(r * x1 / n1) << ',' << py(r * y1 / n1) << "\" fill=\"#e8e8e8\" stroke=\"none\"/>\n";
    for (std::size_t i = 0; i < 2; ++i) {
      const auto [x, y] = plot_coordinates(rs, g.chamber_rays[i]);
      const double n = std::hypot(x, y);
      s << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(r * x / n) << "\" y2=\"" << py(r * y / n)
        << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
      s << "<text x=\"" << px(0.8 * r * x / n) << "\" y=\"" << py(0.8 * r * y / n + 6 / scale)
        << "\" font-size=\"12\" font-family=\"sans-serif\">omega_" << i + 1 << "</text>\n";
    }
  }
  s << "<line x1=\"10\" y1=\"" << fmt(center) << "\" x2=\"" << fmt(size - 10) << "\" y2=\"" << fmt(center)
    << "\" stroke=\"#cccccc\"/>\n";
  s << "<line x1=\"" << fmt(center) << "\" y1=\"10\" x2=\"" << fmt(center) << "\" y2=\"" << fmt(size - 10)
    << "\" stroke=\"#cccccc\"/>\n";

  for (std::size_t k = 0; k < g.hulls.size(); ++k) {
    const auto& h = g.hulls[k];
    s << "<polygon points=\"";
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
      const auto [x, y] = plot_coordinates(rs, h.vertices[i]);
      s << (i ? " " : "") << px(x) << ',' << py(y);
    }
    s << "\" fill=\"" << h.color << "\" fill-opacity=\"" << (k == 0 ? "0.25" : "0.15") << "\" stroke=\"" << h.color
      << "\" stroke-width=\"" << (k == 0 ? "5" : "2.5") << '"' << (k == 0 ? "" : " stroke-dasharray=\"9 5\"")
      << "/>\n";
  }

  double ly = size + 10;
  for (const auto& h : g.hulls) {
    s << "<rect x=\"20\" y=\"" << fmt(ly) << "\" width=\"14\" height=\"14\" fill=\"" << h.color << "\"/>\n";
    s << "<text x=\"42\" y=\"" << fmt(ly + 12) << "\" font-size=\"13\" font-family=\"sans-serif\">" << h.label
      << "</text>\n";
    ly += 22;
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace weylgrowth
