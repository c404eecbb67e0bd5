#pragma once

// Dense two-phase tableau simplex with Bland's rule, for double or exact
// rational scalars. Problems here have a handful of variables and a few dozen
// rows, so a dense tableau is the simplest robust choice.

#include <cmath>
#include <cstddef>
#include <gmpxx.h>
#include <stdexcept>
#include <vector>

namespace weylgrowth {

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };
enum class RowSense { le, eq, ge };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

template <class T>
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<T> objective;  // maximize objective . x
  std::vector<std::vector<T>> rows;
  std::vector<RowSense> senses;
  std::vector<T> rhs;
  std::vector<bool> is_free;  // unrestricted sign; default x >= 0

  explicit LinearProgram(std::size_t n) : num_vars(n), objective(n, T(0)), is_free(n, false) {}
  void add_row(std::vector<T> a, RowSense s, T b) {
    if (a.size() != num_vars) throw std::invalid_argument("LP row has wrong length");
    rows.push_back(std::move(a));
    senses.push_back(s);
    rhs.push_back(std::move(b));
  }
};

template <class T>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  T value = T(0);
  std::vector<T> x;
  std::vector<T> ray;  // improving direction when unbounded
  std::size_t iterations = 0;
};

namespace lp_detail {

template <class T>
struct Tol {
  static bool pos(const T& x, double) { return x > 0; }
  static bool neg(const T& x, double) { return x < 0; }
  static bool zero(const T& x, double) { return x == 0; }
};
template <>
struct Tol<double> {
  static bool pos(double x, double eps) { return x > eps; }
  static bool neg(double x, double eps) { return x < -eps; }
  static bool zero(double x, double eps) { return std::abs(x) <= eps; }
};

template <class T>
class Tableau {
 public:
  Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), a_(m, std::vector<T>(n + 1, T(0))), basis_(m, 0) {}

  std::vector<std::vector<T>>& a() { return a_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::size_t rows() const { return m_; }

  void pivot(std::size_t r, std::size_t c) {
    const T p = a_[r][c];
    for (auto& x : a_[r]) x /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const T f = a_[i][c];
      for (std::size_t j = 0; j <= n_; ++j) a_[i][j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

  // Maximizes cost . x from the current basis. Columns with allowed[j] == false never enter.
  // On unbounded exit, unbounded_col is the entering column.
  LpStatus optimize(const std::vector<T>& cost, const std::vector<bool>& allowed, double eps, std::size_t max_iter,
                    std::size_t& iterations, std::size_t& unbounded_col) {
    for (;;) {
      if (iterations >= max_iter) return LpStatus::iteration_limit;
      // reduced cost d_j = c_j - c_B . a_j
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_ && enter == n_; ++j) {
        if (!allowed[j]) continue;
        T d = cost[j];
        for (std::size_t i = 0; i < m_; ++i) d -= cost[basis_[i]] * a_[i][j];
        if (Tol<T>::pos(d, eps)) enter = j;
      }
      if (enter == n_) return LpStatus::optimal;
      std::size_t leave = m_;
      T best{};
      for (std::size_t i = 0; i < m_; ++i) {
        if (!Tol<T>::pos(a_[i][enter], eps)) continue;
        T ratio = a_[i][n_] / a_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m_) {
        unbounded_col = enter;
        return LpStatus::unbounded;
      }
      pivot(leave, enter);
      ++iterations;
    }
  }

 private:
  std::size_t m_, n_;
  std::vector<std::vector<T>> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace lp_detail

template <class T>
LpResult<T> solve_lp(const LinearProgram<T>& lp, std::size_t max_iter = 50000, double eps = 1e-10) {
  using lp_detail::Tol;
  const std::size_t nv = lp.num_vars;
  const std::size_t m = lp.rows.size();
  // structural columns: x+ for each var, x- for free vars
  std::vector<std::size_t> neg_col(nv, static_cast<std::size_t>(-1));
  std::size_t ncol = nv;
  for (std::size_t j = 0; j < nv; ++j)
    if (lp.is_free[j]) neg_col[j] = ncol++;
  std::vector<std::size_t> slack_col(m, static_cast<std::size_t>(-1)), art_col(m, static_cast<std::size_t>(-1));
  std::vector<bool> flip(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    flip[i] = lp.rhs[i] < 0;
    RowSense s = lp.senses[i];
    if (flip[i] && s != RowSense::eq) s = s == RowSense::le ? RowSense::ge : RowSense::le;
    if (s != RowSense::eq) slack_col[i] = ncol++;
  }
  for (std::size_t i = 0; i < m; ++i) {
    RowSense s = lp.senses[i];
    if (flip[i] && s != RowSense::eq) s = s == RowSense::le ? RowSense::ge : RowSense::le;
    if (s != RowSense::le) art_col[i] = ncol++;
  }
  lp_detail::Tableau<T> tab(m, ncol);
  auto& a = tab.a();
  for (std::size_t i = 0; i < m; ++i) {
    const T sign = flip[i] ? T(-1) : T(1);
    for (std::size_t j = 0; j < nv; ++j) {
      a[i][j] = sign * lp.rows[i][j];
      if (lp.is_free[j]) a[i][neg_col[j]] = -a[i][j];
    }
    a[i][ncol] = sign * lp.rhs[i];
    RowSense s = lp.senses[i];
    if (flip[i] && s != RowSense::eq) s = s == RowSense::le ? RowSense::ge : RowSense::le;
    if (s == RowSense::le) {
      a[i][slack_col[i]] = 1;
      tab.basis()[i] = slack_col[i];
    } else {
      if (s == RowSense::ge) a[i][slack_col[i]] = -1;
      a[i][art_col[i]] = 1;
      tab.basis()[i] = art_col[i];
    }
  }

  LpResult<T> res;
  std::vector<bool> allowed(ncol, true);
  std::size_t unb = 0;
  // phase 1: maximize -sum(artificials)
  std::vector<T> cost1(ncol, T(0));
  bool any_art = false;
  for (std::size_t i = 0; i < m; ++i)
    if (art_col[i] != static_cast<std::size_t>(-1)) {
      cost1[art_col[i]] = -1;
      any_art = true;
    }
  if (any_art) {
    const LpStatus s1 = tab.optimize(cost1, allowed, eps, max_iter, res.iterations, unb);
    if (s1 == LpStatus::iteration_limit) {
      res.status = s1;
      return res;
    }
    T infeas = T(0);
    for (std::size_t i = 0; i < m; ++i)
      if (cost1[tab.basis()[i]] != 0) infeas += a[i][ncol];
    if (Tol<T>::pos(infeas, eps * 10)) {
      res.status = LpStatus::infeasible;
      return res;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (cost1[tab.basis()[i]] == 0) continue;
      // artificial at zero level: pivot it out on any usable column
      for (std::size_t j = 0; j < ncol; ++j)
        if (cost1[j] == 0 && !Tol<T>::zero(a[i][j], eps)) {
          tab.pivot(i, j);
          break;
        }
    }
    for (std::size_t i = 0; i < m; ++i)
      if (art_col[i] != static_cast<std::size_t>(-1)) allowed[art_col[i]] = false;
  }
  std::vector<T> cost2(ncol, T(0));
  for (std::size_t j = 0; j < nv; ++j) {
    cost2[j] = lp.objective[j];
    if (lp.is_free[j]) cost2[neg_col[j]] = -lp.objective[j];
  }
  const LpStatus s2 = tab.optimize(cost2, allowed, eps, max_iter, res.iterations, unb);
  std::vector<T> full(ncol, T(0));
  for (std::size_t i = 0; i < m; ++i) full[tab.basis()[i]] = a[i][ncol];
  auto fold = [&](const std::vector<T>& v) {
    std::vector<T> x(nv, T(0));
    for (std::size_t j = 0; j < nv; ++j) {
      x[j] = v[j];
      if (lp.is_free[j]) x[j] -= v[neg_col[j]];
    }
    return x;
  };
  res.x = fold(full);
  res.value = T(0);
  for (std::size_t j = 0; j < nv; ++j) res.value += lp.objective[j] * res.x[j];
  res.status = s2;
  if (s2 == LpStatus::unbounded) {
    std::vector<T> dir(ncol, T(0));
    dir[unb] = 1;
    for (std::size_t i = 0; i < m; ++i) dir[tab.basis()[i]] = -a[i][unb];
    res.ray = fold(dir);
  }
  return res;
}

}  // namespace weylgrowth
