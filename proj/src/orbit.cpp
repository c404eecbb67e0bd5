#include "weylgrowth/orbit.hpp"

#include "weylgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <regex>
#include <unordered_map>

namespace weylgrowth {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<long long>& k) const {
    std::size_t h = 1469598103934665603ULL;
    for (long long x : k) h = (h ^ std::hash<long long>{}(x)) * 1099511628211ULL;
    return h;
  }
};

using KeyMap = std::unordered_map<std::vector<long long>, std::size_t, KeyHash>;

// Entries rounded on a grid of tol times a power-of-two scale of the matrix.
std::vector<long long> element_key(const Eigen::MatrixXd& m, double tol) {
  const double big = m.size() == 0 ? 1.0 : std::max(1.0, m.cwiseAbs().maxCoeff());
  const int e = std::ilogb(big) + 1;
  const double step = tol * std::ldexp(1.0, e);
  std::vector<long long> key;
  key.reserve(static_cast<std::size_t>(m.size()) + 1);
  key.push_back(e);
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) key.push_back(std::llround(m(i, j) / step));
  return key;
}

std::uint8_t inverse_letter(std::uint8_t l) { return static_cast<std::uint8_t>(l ^ 1u); }

std::vector<std::uint8_t> inverse_word(const std::vector<std::uint8_t>& w) {
  std::vector<std::uint8_t> out(w.rbegin(), w.rend());
  for (auto& l : out) l = inverse_letter(l);
  return out;
}

double euclid(const Vec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

RootSystem product_a1(std::size_t k) {
  RootSystemData d;
  for (std::size_t i = 0; i < k; ++i) d.simple_roots.push_back(unit_vector(k, i));
  RatMatrix q(k, k);
  for (std::size_t i = 0; i < k; ++i) q(i, i) = 2;
  d.inner_product = q;
  d.label = "a1^" + std::to_string(k);
  return RootSystem::build(d);
}

// Euclidean frame for vectors of a: z = L^T y with L L^T = Q^{-1}.
Eigen::MatrixXd frame(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  Eigen::MatrixXd h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rs.vector_form()(i, j).get_d();
  Eigen::MatrixXd l = Eigen::LLT<Eigen::MatrixXd>(h).matrixL();
  return l.transpose();
}

Eigen::VectorXd as_eigen(const Vec& v) { return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())); }

}  // namespace

Ambient parse_ambient(const std::string& name) {
  std::smatch m;
  static const std::regex sl(R"(sl([2-6])r)"), prod(R"(sl2r\^([1-3]))");
  if (std::regex_match(name, m, sl)) {
    const std::size_t n = std::stoul(m[1]);
    return Ambient{name, n, 1, n, build_root_system("a" + std::to_string(n - 1))};
  }
  if (std::regex_match(name, m, prod)) {
    const std::size_t k = std::stoul(m[1]);
    return Ambient{name, 2 * k, k, 2, product_a1(k)};
  }
  throw InputError("unknown ambient '" + name + "' (expected sl<n>r with n <= 6 or sl2r^<k> with k <= 3)");
}

std::vector<Eigen::MatrixXd> normalized_letters(const MatrixGroupSpec& spec, const Ambient& amb) {
  std::vector<Eigen::MatrixXd> letters;
  const auto n = static_cast<Eigen::Index>(amb.matrix_size);
  const auto b = static_cast<Eigen::Index>(amb.block_size);
  for (const auto& g : spec.generators) {
    if (g.rows() != n || g.cols() != n) throw InputError("generator has the wrong size for " + amb.name);
    if (!g.allFinite()) throw InputError("generator has non-finite entries");
    Eigen::MatrixXd m = g;
    for (std::size_t k = 0; k < amb.blocks; ++k) {
      const auto off = static_cast<Eigen::Index>(k) * b;
      for (Eigen::Index i = off; i < off + b; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          if ((j < off || j >= off + b) && m(i, j) != 0) throw InputError("generator is not block diagonal");
      const double det = m.block(off, off, b, b).determinant();
      if (!(std::abs(det) > 1e-300)) throw InputError("generator is singular");
      if (det < 0 && b % 2 == 0) throw InputError("generator has negative determinant");
      const double c = std::copysign(std::pow(std::abs(det), 1.0 / static_cast<double>(b)), det);
      m.block(off, off, b, b) /= c;
    }
    letters.push_back(m);
    letters.push_back(m.inverse());
  }
  return letters;
}

Eigen::MatrixXd word_matrix(const std::vector<Eigen::MatrixXd>& letters, const std::vector<std::uint8_t>& word) {
  const auto n = letters.empty() ? 0 : letters.front().rows();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (auto l : word) m = m * letters.at(l);
  return m;
}

Vec cartan_projection(const Ambient& amb, const Eigen::MatrixXd& m, const Eigen::MatrixXd& inv) {
  Vec out;
  const auto b = static_cast<Eigen::Index>(amb.block_size);
  const Eigen::Index half = b / 2;
  auto log_sv = [&](const Eigen::MatrixXd& blk) {
    const double scale = blk.cwiseAbs().maxCoeff();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(blk / scale);
    Eigen::VectorXd s = svd.singularValues();
    for (auto& x : s) x = std::log(x) + std::log(scale);
    return s;
  };
  for (std::size_t k = 0; k < amb.blocks; ++k) {
    const auto off = static_cast<Eigen::Index>(k) * b;
    // the small singular values are the reciprocals of the large ones of the inverse
    const Eigen::VectorXd top = log_sv(m.block(off, off, b, b));
    const Eigen::VectorXd bottom = log_sv(inv.block(off, off, b, b));
    Vec block(static_cast<std::size_t>(b));
    double sum = 0;
    for (Eigen::Index i = 0; i < half; ++i) {
      block[static_cast<std::size_t>(i)] = top(i);
      block[static_cast<std::size_t>(b - 1 - i)] = -bottom(i);
      sum += top(i) - bottom(i);
    }
    if (b % 2) block[static_cast<std::size_t>(half)] = -sum;
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

Vec cartan_projection(const Ambient& amb, const Eigen::MatrixXd& m) { return cartan_projection(amb, m, m.inverse()); }

Vec cartan_of_word(const Ambient& amb, const std::vector<Eigen::MatrixXd>& letters, const std::vector<std::uint8_t>& word) {
  return cartan_projection(amb, word_matrix(letters, word), word_matrix(letters, inverse_word(word)));
}

Vec root_coordinates(const Ambient& amb, const Vec& ambient) {
  Vec y;
  for (std::size_t k = 0; k < amb.blocks; ++k)
    for (std::size_t i = 0; i + 1 < amb.block_size; ++i)
      y.push_back(ambient[k * amb.block_size + i] - ambient[k * amb.block_size + i + 1]);
  return y;
}

Vec opposition_ambient(const Ambient& amb, const Vec& ambient) {
  Vec out(ambient.size());
  for (std::size_t k = 0; k < amb.blocks; ++k)
    for (std::size_t i = 0; i < amb.block_size; ++i)
      out[k * amb.block_size + i] = -ambient[k * amb.block_size + amb.block_size - 1 - i];
  return out;
}

CartanSample enumerate_orbit(const MatrixGroupSpec& spec) {
  const Ambient amb = parse_ambient(spec.ambient);
  if (spec.max_word_length < 0) throw InputError("max_word_length must be nonnegative");
  if (!(spec.dedupe_tolerance > 0)) throw InputError("dedupe_tolerance must be positive");
  const auto letters = normalized_letters(spec, amb);
  CartanSample out;
  out.ambient = amb.name;
  out.rank = amb.root_system.rank();

  struct Node {
    std::vector<std::uint8_t> word;
    Eigen::MatrixXd m;
    Eigen::MatrixXd inv;
  };
  std::unordered_map<std::vector<long long>, char, KeyHash> seen;
  const auto n = static_cast<Eigen::Index>(amb.matrix_size);
  std::vector<Node> frontier = {{{}, Eigen::MatrixXd::Identity(n, n), Eigen::MatrixXd::Identity(n, n)}};
  seen.emplace(element_key(frontier[0].m, spec.dedupe_tolerance), 1);
  auto emit = [&](const Node& node) {
    CartanPoint p;
    p.ambient = cartan_projection(amb, node.m, node.inv);
    p.coords = root_coordinates(amb, p.ambient);
    p.length = static_cast<int>(node.word.size());
    p.word = node.word;
    out.points.push_back(std::move(p));
  };
  emit(frontier[0]);

  for (int len = 1; len <= spec.max_word_length && !frontier.empty(); ++len) {
    std::vector<Node> next;
    for (const auto& node : frontier)
      for (std::size_t l = 0; l < letters.size(); ++l) {
        const auto letter = static_cast<std::uint8_t>(l);
        if (spec.semigroup && (letter & 1u)) continue;
        if (!node.word.empty() && letter == inverse_letter(node.word.back())) continue;
        Node child{node.word, node.m * letters[l], letters[l ^ 1u] * node.inv};
        child.word.push_back(letter);
        if (!child.m.allFinite() || !child.inv.allFinite()) {
          ++out.dropped;
          continue;
        }
        if (!seen.emplace(element_key(child.m, spec.dedupe_tolerance), 1).second) {
          ++out.merged;
          continue;
        }
        const Vec c = cartan_projection(amb, child.m, child.inv);
        if (!std::all_of(c.begin(), c.end(), [](double x) { return std::isfinite(x); })) {
          ++out.dropped;
          continue;
        }
        if (out.points.size() + next.size() + 1 > spec.cap)
          throw CapExceeded("word enumeration exceeds the cap of " + std::to_string(spec.cap) + " elements");
        next.push_back(std::move(child));
      }
    for (const auto& node : next) emit(node);
    frontier = std::move(next);
  }
  return out;
}

EmpiricalCone empirical_limit_cone(const CartanSample& s, double radius_cut) {
  const Ambient amb = parse_ambient(s.ambient);
  const auto& rs = amb.root_system;
  const std::size_t r = rs.rank();
  const Eigen::MatrixXd f = frame(rs);
  std::vector<Vec> dirs;
  std::vector<Eigen::VectorXd> zs;
  for (const auto& p : s.points) {
    if (euclid(p.ambient) < radius_cut || euclid(p.ambient) == 0) continue;
    const Eigen::VectorXd z = f * as_eigen(p.coords);
    const double nz = z.norm();
    Vec d(p.coords);
    for (auto& x : d) x /= nz;
    dirs.push_back(std::move(d));
    zs.push_back(z / nz);
  }
  if (dirs.empty()) throw InputError("no sample point beyond the radius cut; increase the word length");
  EmpiricalCone out;
  out.points = dirs.size();
  out.collinear = std::all_of(zs.begin(), zs.end(), [&](const Eigen::VectorXd& z) { return (z - zs[0]).norm() <= 1e-9; });
  out.facet_margin.assign(r, std::numeric_limits<double>::infinity());
  for (const auto& d : dirs)
    for (std::size_t i = 0; i < r; ++i) out.facet_margin[i] = std::min(out.facet_margin[i], d[i]);
  for (double m : out.facet_margin) out.avoids_facet.push_back(m > 1e-9);

  std::vector<std::size_t> keep;
  if (out.collinear) {
    keep.push_back(0);
  } else if (r == 2) {
    std::vector<double> angle;
    for (const auto& z : zs) angle.push_back(std::atan2(z(1), z(0)));
    const auto [lo, hi] = std::minmax_element(angle.begin(), angle.end());
    out.width_degrees = (*hi - *lo) * 180 / M_PI;
    keep = {static_cast<std::size_t>(lo - angle.begin()), static_cast<std::size_t>(hi - angle.begin())};
  } else {
    // directions extreme for one of a fixed family of linear functionals
    std::mt19937_64 rng(0);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 512; ++k) {
      Eigen::VectorXd w(static_cast<Eigen::Index>(r));
      for (auto& x : w) x = gauss(rng);
      std::size_t best = 0;
      for (std::size_t i = 1; i < zs.size(); ++i)
        if (zs[i].dot(w) > zs[best].dot(w)) best = i;
      keep.push_back(best);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  }
  for (auto i : keep) out.generators.push_back(dirs[i]);
  if (r == 2) {
    const auto& rays = rs.chamber_rays();
    const Eigen::VectorXd a = f * as_eigen(to_doubles(rays[0])), b = f * as_eigen(to_doubles(rays[1]));
    out.chamber_degrees = std::acos(a.dot(b) / (a.norm() * b.norm())) * 180 / M_PI;
  }
  return out;
}

ExponentEstimate estimate_exponent(const CartanSample& s, const Vec& mu, double fraction, std::size_t min_points) {
  if (s.points.size() < min_points)
    throw InputError("exponent estimate needs at least " + std::to_string(min_points) + " points");
  if (!(fraction > 0 && fraction <= 1)) throw InputError("fraction must lie in (0, 1]");
  if (mu.size() != s.rank) throw InputError("covector has wrong dimension");
  std::vector<double> vals;
  int longest = 0;
  for (const auto& p : s.points) longest = std::max(longest, p.length);
  double complete = std::numeric_limits<double>::infinity();
  for (const auto& p : s.points) {
    double v = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) v += mu[i] * p.coords[i];
    vals.push_back(v);
    if (p.length == longest) complete = std::min(complete, v);
  }
  std::sort(vals.begin(), vals.end());
  if (vals.back() - vals.front() < 3) throw InputError("mu values spread over less than 3 units");
  ExponentEstimate out;
  out.t_high = complete;
  out.t_low = vals.front() + (1 - fraction) * (complete - vals.front());
  if (!(out.t_high > out.t_low)) throw InputError("no complete counting range; increase the word length");
  const int grid = 64;
  std::vector<double> t, y;
  for (int k = 0; k < grid; ++k) {
    const double tk = out.t_low + (out.t_high - out.t_low) * k / (grid - 1);
    const auto count = std::upper_bound(vals.begin(), vals.end(), tk) - vals.begin();
    if (count == 0) continue;
    t.push_back(tk);
    y.push_back(std::log(static_cast<double>(count)));
  }
  const double m = static_cast<double>(t.size());
  double tm = 0, ym = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    tm += t[i] / m;
    ym += y[i] / m;
  }
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sxx += (t[i] - tm) * (t[i] - tm);
    sxy += (t[i] - tm) * (y[i] - ym);
  }
  out.slope = sxy / sxx;
  double sse = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double e = y[i] - ym - out.slope * (t[i] - tm);
    sse += e * e;
  }
  out.band = 2 * std::sqrt(sse / std::max(1.0, m - 2) / sxx);
  out.points = vals.size();
  return out;
}

SymmetryReport iota_symmetry(const MatrixGroupSpec& spec, const CartanSample& s, int max_length) {
  const Ambient amb = parse_ambient(spec.ambient);
  const auto letters = normalized_letters(spec, amb);
  KeyMap index;
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (s.points[i].length <= max_length)
      index.emplace(element_key(word_matrix(letters, s.points[i].word), spec.dedupe_tolerance), i);
  SymmetryReport out;
  for (const auto& p : s.points) {
    if (p.length > max_length) continue;
    ++out.checked;
    const auto it = index.find(element_key(word_matrix(letters, inverse_word(p.word)), spec.dedupe_tolerance));
    if (it == index.end()) {
      ++out.missing;
      continue;
    }
    const Vec expect = opposition_ambient(amb, p.ambient);
    const Vec& got = s.points[it->second].ambient;
    for (std::size_t i = 0; i < got.size(); ++i) out.max_defect = std::max(out.max_defect, std::abs(got[i] - expect[i]));
  }
  return out;
}

double subadditivity_defect(const MatrixGroupSpec& spec, const CartanSample& s, std::size_t pairs, std::uint64_t seed) {
  const Ambient amb = parse_ambient(spec.ambient);
  const auto letters = normalized_letters(spec, amb);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, s.points.size() - 1);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < pairs; ++k) {
    const auto& a = s.points[pick(rng)];
    const auto& b = s.points[pick(rng)];
    std::vector<std::uint8_t> w = a.word;
    w.insert(w.end(), b.word.begin(), b.word.end());
    worst = std::max(worst, euclid(cartan_of_word(amb, letters, w)) - euclid(a.ambient) - euclid(b.ambient));
  }
  return worst;
}

}  // namespace weylgrowth
