#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylgrowth/errors.hpp"
#include "weylgrowth/orbit.hpp"

#include <cmath>
#include <random>

using namespace weylgrowth;

namespace {

using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

MatrixGroupSpec cyclic(int depth) {
  MatrixGroupSpec s;
  s.ambient = "sl3r";
  s.generators = {Eigen::Vector3d(std::exp(1.0), 1.0, std::exp(-1.0)).asDiagonal()};
  s.max_word_length = depth;
  return s;
}

Eigen::Matrix2d hyperbolic(double t, double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r * Eigen::Vector2d(std::exp(t), std::exp(-t)).asDiagonal() * r.transpose();
}

// log singular values of a word product computed in long double from the raw generators
std::vector<long double> oracle_cartan(const std::vector<Eigen::MatrixXd>& gens, const std::vector<std::uint8_t>& word,
                                       std::size_t block) {
  const auto n = gens.front().rows();
  MatL m = MatL::Identity(n, n);
  for (auto l : word) {
    MatL g = gens[l / 2].cast<long double>();
    if (l % 2) g = g.inverse().eval();
    m = (m * g).eval();
  }
  std::vector<long double> out;
  for (Eigen::Index off = 0; off < n; off += static_cast<Eigen::Index>(block)) {
    const auto b = static_cast<Eigen::Index>(block);
    Eigen::JacobiSVD<MatL> svd(m.block(off, off, b, b));
    for (Eigen::Index i = 0; i < b; ++i) out.push_back(std::log(svd.singularValues()(i)));
  }
  return out;
}

}  // namespace

TEST_CASE("trivial group") {
  MatrixGroupSpec s;
  s.ambient = "sl3r";
  auto sample = enumerate_orbit(s);
  REQUIRE(sample.points.size() == 1);
  for (double x : sample.points[0].ambient) CHECK(x == doctest::Approx(0));
}

TEST_CASE("cyclic diagonal group") {
  auto spec = cyclic(500);
  auto sample = enumerate_orbit(spec);
  REQUIRE(sample.points.size() == 1001);
  for (const auto& p : sample.points) {
    const double k = p.length;
    CHECK(p.ambient[0] == doctest::Approx(k).epsilon(1e-12));
    CHECK(std::abs(p.ambient[1]) < 1e-9);
    CHECK(p.ambient[2] == doctest::Approx(-k).epsilon(1e-12));
  }
  auto cone = empirical_limit_cone(sample, 1.0);
  CHECK(cone.collinear);
  REQUIRE(cone.generators.size() == 1);
  CHECK(cone.generators[0][0] == doctest::Approx(cone.generators[0][1]));
  // the ray (1,0,-1) pairs to 1 with both simple roots
  CHECK(cone.avoids_facet == std::vector<bool>{true, true});

  auto est = estimate_exponent(sample, {0.5, 0.5});
  CHECK(std::abs(est.slope) <= 0.05);
  CHECK(est.t_high == doctest::Approx(500));

  auto sym = iota_symmetry(spec, sample, 10);
  CHECK(sym.checked == 21);
  CHECK(sym.missing == 0);
  CHECK(sym.max_defect < 1e-6);
}

TEST_CASE("block-embedded free semigroup against a long double oracle") {
  MatrixGroupSpec spec;
  spec.ambient = "sl4r";
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4), b = Eigen::MatrixXd::Zero(4, 4);
  a.block(0, 0, 2, 2) = hyperbolic(0.7, 0.3);
  a.block(2, 2, 2, 2) = hyperbolic(0.4, 1.1);
  b.block(0, 0, 2, 2) = hyperbolic(0.5, 1.4);
  b.block(2, 2, 2, 2) = hyperbolic(0.9, 0.2);
  spec.generators = {a, b};
  spec.semigroup = true;
  spec.max_word_length = 12;
  auto sample = enumerate_orbit(spec);
  CHECK(sample.points.size() == (1u << 13) - 1);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, sample.points.size() - 1);
  for (int k = 0; k < 100; ++k) {
    const auto& p = sample.points[pick(rng)];
    const auto ref = oracle_cartan(spec.generators, p.word, 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(p.ambient[i] - static_cast<double>(ref[i])) < 1e-9);
  }
  for (const auto& p : sample.points) {
    CHECK(p.ambient[0] >= p.ambient[1] - 1e-12);
    CHECK(std::abs(p.ambient[0] + p.ambient[1] + p.ambient[2] + p.ambient[3]) < 1e-6);
  }
  CHECK(subadditivity_defect(spec, sample, 500, 2) <= 1e-6);
}

TEST_CASE("product of two SL(2) factors fills the chamber") {
  MatrixGroupSpec spec;
  spec.ambient = "sl2r^2";
  auto embed = [](const Eigen::Matrix2d& m, int slot) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
    g.block(2 * slot, 2 * slot, 2, 2) = m;
    return g;
  };
  spec.generators = {embed(hyperbolic(1.0, 0.0), 0), embed(hyperbolic(1.0, 0.8), 0), embed(hyperbolic(1.2, 0.1), 1),
                     embed(hyperbolic(1.2, 1.0), 1)};
  spec.semigroup = true;
  double previous = 0;
  for (int depth : {6, 9, 12}) {
    spec.max_word_length = depth;
    auto cone = empirical_limit_cone(enumerate_orbit(spec), 2.0);
    CHECK(cone.chamber_degrees == doctest::Approx(90));
    CHECK(cone.width_degrees >= previous - 1e-9);
    previous = cone.width_degrees;
  }
  CHECK(previous >= 80);
}

TEST_CASE("Schottky group exponent is stable in the depth") {
  MatrixGroupSpec spec;
  spec.ambient = "sl2r";
  spec.generators = {hyperbolic(2.0, 0.0), hyperbolic(2.0, M_PI / 4)};
  spec.max_word_length = 8;
  auto shallow = enumerate_orbit(spec);
  spec.max_word_length = 10;
  auto deep = enumerate_orbit(spec);
  CHECK(deep.points.size() == 1 + 4 * (59049 - 1) / 2);
  const Vec mu = {0.5};
  auto e8 = estimate_exponent(shallow, mu);
  auto e10 = estimate_exponent(deep, mu);
  CHECK(e10.slope > 0.2);
  CHECK(std::abs(e8.slope - e10.slope) <= 0.05);
  auto sym = iota_symmetry(spec, deep, 10);
  CHECK(sym.missing == 0);
  CHECK(sym.max_defect < 1e-6);
}

TEST_CASE("errors") {
  MatrixGroupSpec s = cyclic(3);
  s.ambient = "sl7r";
  CHECK_THROWS_AS(enumerate_orbit(s), InputError);
  s.ambient = "sl3r";
  s.generators = {Eigen::MatrixXd::Zero(3, 3)};
  CHECK_THROWS_AS(enumerate_orbit(s), InputError);
  s.generators = {Eigen::MatrixXd::Identity(2, 2)};
  CHECK_THROWS_AS(enumerate_orbit(s), InputError);

  auto c = cyclic(20);
  auto sample = enumerate_orbit(c);
  CHECK_THROWS_AS(empirical_limit_cone(sample, 1e6), InputError);
  CHECK_THROWS_AS(estimate_exponent(sample, {0.5, 0.5}), InputError);
  c.cap = 10;
  CHECK_THROWS_AS(enumerate_orbit(c), CapExceeded);

  // determinant is renormalized
  MatrixGroupSpec d = cyclic(2);
  d.generators = {Eigen::Vector3d(2.0, 2.0, 2.0).asDiagonal()};
  auto trivial = enumerate_orbit(d);
  CHECK(trivial.points.size() == 1);
  CHECK(trivial.merged > 0);
}
