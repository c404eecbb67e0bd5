#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylgrowth/lp.hpp"

#include <random>

using namespace weylgrowth;

TEST_CASE("textbook maximization") {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
  LinearProgram<mpq_class> lp(2);
  lp.objective = {3, 5};
  lp.add_row({1, 0}, RowSense::le, 4);
  lp.add_row({0, 2}, RowSense::le, 12);
  lp.add_row({3, 2}, RowSense::le, 18);
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 36);
  CHECK(r.x == std::vector<mpq_class>{2, 6});
}

TEST_CASE("equality, ge rows and free variables") {
  // max t s.t. x + y = 1, x - t >= 0, y - t >= 0, t free -> t = 1/2
  LinearProgram<double> lp(3);
  lp.objective = {0, 0, 1};
  lp.is_free[2] = true;
  lp.add_row({1, 1, 0}, RowSense::eq, 1);
  lp.add_row({1, 0, -1}, RowSense::ge, 0);
  lp.add_row({0, 1, -1}, RowSense::ge, 0);
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == doctest::Approx(0.5));
  // negative optimum on a free variable
  LinearProgram<double> neg(2);
  neg.objective = {0, 1};
  neg.is_free[1] = true;
  neg.add_row({1, 0}, RowSense::eq, 1);
  neg.add_row({-2, -1}, RowSense::ge, 1);
  auto rn = solve_lp(neg);
  REQUIRE(rn.status == LpStatus::optimal);
  CHECK(rn.value == doctest::Approx(-3));
}

TEST_CASE("infeasible and unbounded") {
  LinearProgram<mpq_class> inf(1);
  inf.add_row({1}, RowSense::ge, 2);
  inf.add_row({1}, RowSense::le, 1);
  CHECK(solve_lp(inf).status == LpStatus::infeasible);
  LinearProgram<mpq_class> unb(2);
  unb.objective = {1, 1};
  unb.add_row({1, -1}, RowSense::le, 1);
  auto r = solve_lp(unb);
  REQUIRE(r.status == LpStatus::unbounded);
  REQUIRE(r.ray.size() == 2);
  CHECK(r.ray[0] + r.ray[1] > 0);
  CHECK(r.ray[0] - r.ray[1] <= 0);
  CHECK(r.ray[0] >= 0);
  CHECK(r.ray[1] >= 0);
}

TEST_CASE("degenerate redundant equalities") {
  LinearProgram<mpq_class> lp(2);
  lp.objective = {1, 0};
  lp.add_row({1, 1}, RowSense::eq, 1);
  lp.add_row({2, 2}, RowSense::eq, 2);
  lp.add_row({1, 0}, RowSense::le, mpq_class(3, 4));
  auto r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == mpq_class(3, 4));
}

TEST_CASE("double and exact solvers agree on random problems") {
  std::mt19937 gen(23);
  std::uniform_int_distribution<int> c(-5, 5);
  int optimal = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 4;
    LinearProgram<double> d(n);
    LinearProgram<mpq_class> q(n);
    for (std::size_t j = 0; j < n; ++j) {
      const int v = c(gen);
      d.objective[j] = v;
      q.objective[j] = v;
    }
    for (int i = 0; i < 6; ++i) {
      std::vector<double> rd(n);
      std::vector<mpq_class> rq(n);
      for (std::size_t j = 0; j < n; ++j) {
        const int v = c(gen);
        rd[j] = v;
        rq[j] = v;
      }
      const int b = c(gen);
      const RowSense s = i % 3 == 0 ? RowSense::ge : RowSense::le;
      d.add_row(rd, s, b);
      q.add_row(rq, s, b);
    }
    auto rd = solve_lp(d);
    auto rq = solve_lp(q);
    CHECK(rd.status == rq.status);
    if (rq.status == LpStatus::optimal) {
      ++optimal;
      CHECK(rd.value == doctest::Approx(rq.value.get_d()).epsilon(1e-9));
    }
  }
  CHECK(optimal > 20);
}
