#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylgrowth/errors.hpp"
#include "weylgrowth/root_system.hpp"

#include <random>

using namespace weylgrowth;

namespace {

RatVec half(const RatVec& v) { return Rational(1, 2) * v; }

// Brute-force closure of the simple roots under simple reflections: an
// independent way to get all roots.
std::vector<RatVec> orbit_closure(const RootSystem& rs) {
  std::vector<RatVec> out = rs.simple_roots();
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t j = 0; j < rs.rank(); ++j) {
      RatVec img = rs.reflect(j, out[k]);
      if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
    }
  return out;
}

}  // namespace

TEST_CASE("so(2,n) is B2 with short multiplicity n-2 and rho = (n/2, (n-2)/2)") {
  for (int n = 3; n <= 10; ++n) {
    auto rs = build_root_system("so(2," + std::to_string(n) + ")");
    CHECK(rs.rank() == 2);
    CHECK(rs.simple_roots() == std::vector<RatVec>{{1, -1}, {0, 1}});
    CHECK(rs.multiplicity({1, 1}) == 1);
    CHECK(rs.multiplicity({1, -1}) == 1);
    CHECK(rs.multiplicity({0, 1}) == n - 2);
    CHECK(rs.multiplicity({-1, 0}) == n - 2);
    CHECK(rho(rs) == RatVec{frac(n, 2), frac(n - 2, 2)});
  }
  CHECK(rho(build_root_system("so(2,5)")) == RatVec{Rational(5, 2), Rational(3, 2)});
}

TEST_CASE("rank one custom system") {
  RootSystemData d;
  d.simple_roots = {{1}};
  auto rs = RootSystem::build(d);
  REQUIRE(rs.positive_roots().size() == 1);
  CHECK(rs.positive_roots()[0].coords == RatVec{1});
  CHECK(rs.positive_roots()[0].multiplicity == 1);
  CHECK(rho(rs) == RatVec{Rational(1, 2)});
  CHECK(weyl_group(rs).size() == 2);
  CHECK(opposition_involution(rs).is_identity());
  CHECK(fundamental_weights(rs)[0] == RatVec{Rational(1, 2)});
  auto th = strongly_orthogonal_theta(rs);
  CHECK(th.roots == std::vector<RatVec>{{1}});
  CHECK(th.theta == RatVec{Rational(1, 2)});
}

TEST_CASE("B3 simple roots, chamber and fundamental weights") {
  auto rs = build_root_system("B_3");
  CHECK(rs.simple_roots() == std::vector<RatVec>{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
  auto w = fundamental_weights(rs);
  CHECK(w[0] == RatVec{1, 0, 0});
  CHECK(w[1] == RatVec{1, 1, 0});
  CHECK(w[2] == RatVec{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  CHECK(rs.chamber_rays() == std::vector<RatVec>{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}});
  auto th = strongly_orthogonal_theta(rs);
  CHECK(th.theta == RatVec{1, 0, Rational(1, 2)});
  CHECK(th.roots.size() == 3);
}

TEST_CASE("B2 fundamental weights and Theta") {
  auto rs = build_root_system("b2");
  auto w = fundamental_weights(rs);
  CHECK(w[0] == RatVec{1, 0});
  CHECK(w[1] == RatVec{Rational(1, 2), Rational(1, 2)});
  auto th = strongly_orthogonal_theta(rs);
  CHECK(th.theta == RatVec{1, 0});
  CHECK(th.roots == std::vector<RatVec>{{1, 1}, {1, -1}});
}

TEST_CASE("Weyl group orders match brute force and the classification") {
  CHECK(weyl_group(build_root_system("b2")).size() == 8);
  CHECK(weyl_group(build_root_system("b3")).size() == 48);
  const std::pair<const char*, std::size_t> table[] = {
      {"a2", 6}, {"a3", 24}, {"c3", 48}, {"d4", 192}, {"g2", 12}, {"f4", 1152}, {"su(2,3)", 8}, {"sl(4,H)", 24}};
  for (const auto& [name, order] : table) {
    auto rs = build_root_system(name);
    CHECK_MESSAGE(weyl_group(rs).size() == order, name);
    CHECK(rs.predicted_weyl_order() == order);
  }
  CHECK(build_root_system("e6").predicted_weyl_order() == 51840);
  CHECK(build_root_system("e7").predicted_weyl_order() == 2903040);
  CHECK(build_root_system("e8").predicted_weyl_order() == 696729600);
  CHECK_THROWS_AS(weyl_group(build_root_system("e8")), CapExceeded);
  CHECK_THROWS_AS(weyl_group(build_root_system("b3"), 10), CapExceeded);
}

TEST_CASE("positive roots agree with reflection closure") {
  for (const char* name : {"a3", "b3", "c3", "d4", "g2", "f4", "e6"}) {
    auto rs = build_root_system(name);
    auto all = orbit_closure(rs);
    CHECK_MESSAGE(all.size() == 2 * rs.positive_roots().size(), name);
  }
  CHECK(build_root_system("e8").positive_roots().size() == 120);
  CHECK(build_root_system("e7").positive_roots().size() == 63);
}

TEST_CASE("opposition involution") {
  CHECK(opposition_involution(build_root_system("b2")).is_identity());
  CHECK(opposition_involution(build_root_system("b3")).is_identity());
  CHECK(opposition_involution(build_root_system("b5")).is_identity());
  auto a2 = build_root_system("a2");
  CHECK(a2.opposition_permutation() == std::vector<std::size_t>{1, 0});
  CHECK(apply_opposition(a2, {1, 0}) == RatVec{0, 1});
  CHECK(build_root_system("e6").opposition_permutation() == std::vector<std::size_t>{5, 1, 4, 3, 2, 0});
  CHECK(build_root_system("d5").opposition_permutation() == std::vector<std::size_t>{0, 1, 2, 4, 3});
  CHECK(build_root_system("d4").opposition().is_identity());
  // longest element agrees with enumeration: unique element sending rho to -rho
  for (const char* name : {"a2", "a3", "b3", "g2", "d5"}) {
    auto rs = build_root_system(name);
    std::size_t hits = 0;
    for (const auto& w : weyl_group(rs))
      if (w.matrix * rs.rho() == -rs.rho()) {
        ++hits;
        CHECK(w.matrix == rs.longest_element().matrix);
      }
    CHECK(hits == 1);
  }
}

TEST_CASE("dominant representative") {
  auto rs = build_root_system("b2");
  auto a = dominant_representative(rs, {-1, 0});
  CHECK(a.dominant == RatVec{1, 0});
  CHECK(a.w.matrix * RatVec{-1, 0} == a.dominant);
  auto b = dominant_representative(rs, {0, 1});
  CHECK(b.dominant == RatVec{1, 0});
  auto c = dominant_representative(rs, {3, 1});
  CHECK(c.dominant == RatVec{3, 1});
  CHECK(c.w.matrix.is_identity());
  CHECK(c.w.word.empty());
}

TEST_CASE("real form presets") {
  auto su = build_root_system("su(2,5)");
  CHECK_FALSE(su.is_reduced());
  CHECK(su.multiplicity({2, 0}) == 1);
  CHECK(su.multiplicity({1, 0}) == 6);
  CHECK(su.multiplicity({1, 1}) == 2);
  CHECK(strongly_orthogonal_theta(su).theta == RatVec{1, 1});
  auto slc = build_root_system("SL(3,C)");
  CHECK(slc.multiplicity({1, 1}) == 2);
  CHECK(build_root_system("sl(3,R)").multiplicity({1, 0}) == 1);
  CHECK(build_root_system("so(3,3)").positive_roots().size() == 6);
  CHECK(build_root_system("so(1,4)").rank() == 1);
  CHECK(rho(build_root_system("so(1,4)")) == RatVec{Rational(3, 2)});
  CHECK(build_root_system("sp(2,2)").multiplicity({2, 0}) == 3);
  CHECK_THROWS_AS(build_root_system("so(5,2)"), InputError);
  CHECK_THROWS_AS(build_root_system("x7"), InputError);
  CHECK_THROWS_AS(build_root_system("e9"), InputError);
}

TEST_CASE("custom input validation") {
  RootSystemData dep;
  dep.simple_roots = {{1, 0}, {2, 0}};
  CHECK_THROWS_AS(RootSystem::build(dep), InputError);
  RootSystemData bad_mult;
  bad_mult.simple_roots = {{1, -1}, {0, 1}};
  bad_mult.multiplicities = {{{1, 0}, 3}};  // e2 left at 1
  CHECK_THROWS_AS(RootSystem::build(bad_mult), InputError);
  RootSystemData ok = bad_mult;
  ok.multiplicities.push_back({{0, 1}, 3});
  CHECK_NOTHROW(RootSystem::build(ok));
  RootSystemData bad_double;
  bad_double.simple_roots = {{1, -1}, {0, 1}};
  bad_double.multiplicities = {{{2, -2}, 1}, {{2, 2}, 1}};
  CHECK_THROWS_AS(RootSystem::build(bad_double), InputError);
}

TEST_CASE("invariants hold on every preset") {
  for (const auto& name : preset_examples()) {
    auto rs = build_root_system(name);
    INFO(name);
    // rho is iota-invariant
    CHECK(apply_opposition(rs, rs.rho()) == rs.rho());
    // iota is an involution
    CHECK((rs.opposition() * rs.opposition()).is_identity());
    // iota omega_a = omega_{iota a}
    const auto& w = rs.fundamental_weights();
    for (std::size_t i = 0; i < rs.rank(); ++i)
      CHECK(apply_opposition(rs, w[i]) == w[rs.opposition_permutation()[i]]);
    // Theta roots are pairwise strongly orthogonal
    auto th = strongly_orthogonal_theta(rs);
    for (std::size_t i = 0; i < th.roots.size(); ++i)
      for (std::size_t j = i + 1; j < th.roots.size(); ++j) {
        CHECK_FALSE(rs.is_root(th.roots[i] + th.roots[j]));
        CHECK_FALSE(rs.is_root(th.roots[i] - th.roots[j]));
      }
    // Weyl elements are isometries
    if (rs.predicted_weyl_order() <= 2000) {
      for (const auto& g : weyl_group(rs)) CHECK(g.matrix.transpose() * rs.inner_product() * g.matrix == rs.inner_product());
    }
  }
}

TEST_CASE("dominant vectors of an irreducible system pair positively") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coef(0, 9);
  for (const char* name : {"a3", "b3", "c3", "g2", "d4", "so(2,7)"}) {
    auto rs = build_root_system(name);
    const auto& rays = rs.chamber_rays();
    for (int s = 0; s < 1000; ++s) {
      RatVec v = zeros(rs.rank()), u = zeros(rs.rank());
      for (const auto& r : rays) {
        v = v + Rational(coef(gen)) * r;
        u = u + Rational(coef(gen)) * r;
      }
      if (is_zero(v) || is_zero(u)) continue;
      REQUIRE(is_dominant_vector(rs, v));
      CHECK(bilinear(rs.vector_form(), v, u) > 0);
    }
  }
}

TEST_CASE("dominant representative stays in the orbit") {
  auto rs = build_root_system("b3");
  auto group = weyl_group(rs);
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int s = 0; s < 200; ++s) {
    RatVec l{c(gen), c(gen), half({c(gen)})[0]};
    auto d = dominant_representative(rs, l);
    CHECK(is_dominant(rs, d.dominant));
    bool in_orbit = false;
    for (const auto& g : group) in_orbit = in_orbit || g.matrix * l == d.dominant;
    CHECK(in_orbit);
  }
}
