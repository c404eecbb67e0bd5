#pragma once

// Exact rational linear algebra on top of GMP. Everything in the Lie-theoretic
// layer is computed with these types; the float layer lives in Eigen.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weylgrowth {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

/// Parses "p/q", "p", or a finite decimal such as "-0.25" exactly.
/// Canonicalized p/q (mpq_class(p, q) alone does not reduce).
Rational frac(long num, long den);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);
/// Exact conversion of a finite double (every double is a dyadic rational).
Rational from_double(double x);

RatVec zeros(std::size_t n);
RatVec unit_vector(std::size_t n, std::size_t i);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rational& s, const RatVec& a);
Rational dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& a);
std::vector<double> to_doubles(const RatVec& a);

/// Scales to the primitive integer vector on the same ray (gcd 1, same sign).
RatVec primitive(const RatVec& a);
/// True iff b = c * a for some c >= 0 (zero vectors count as collinear).
bool nonneg_multiple(const RatVec& a, const RatVec& b, Rational* factor = nullptr);
bool collinear(const RatVec& a, const RatVec& b);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);
  static RatMatrix from_columns(const std::vector<RatVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;
  RatMatrix transpose() const;
  RatVec operator*(const RatVec& v) const;
  RatMatrix operator*(const RatMatrix& m) const;
  bool operator==(const RatMatrix& other) const;
  bool is_identity() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Bilinear form x^T M y.
Rational bilinear(const RatMatrix& m, const RatVec& x, const RatVec& y);

std::size_t rank(const RatMatrix& m);
/// Unique solution of M x = b for square invertible M; nullopt if singular.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);
/// Any solution of M x = b (free variables set to zero); nullopt if inconsistent.
std::optional<RatVec> solve_least(const RatMatrix& m, const RatVec& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);
/// Basis of {x : M x = 0}.
std::vector<RatVec> nullspace(const RatMatrix& m);
bool linearly_independent(const std::vector<RatVec>& vectors);

}  // namespace weylgrowth
