#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mmp132/bigint.hpp"

namespace mmp132 {

/// Dense univariate polynomial with exact integer coefficients, coeffs()[i] is the
/// coefficient of the i-th power. The highest stored coefficient is never zero, so the
/// zero polynomial stores nothing.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);
  /// Constant polynomial.
  explicit IntPoly(const BigInt& c);

  static IntPoly monomial(const BigInt& c, std::size_t exponent);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of the r-th power; zero past the degree.
  BigInt coeff(std::size_t r) const { return r < c_.size() ? c_[r] : BigInt(0); }
  std::span<const BigInt> coeffs() const { return c_; }
  const BigInt& leading() const { return c_.back(); }

  BigInt eval(const BigInt& at) const;
  /// Value at 1, the sum of the coefficients.
  BigInt sum() const;

  /// Multiplication by the k-th power of the variable.
  IntPoly shifted(std::size_t k) const;
  /// Keeps only powers < n.
  IntPoly truncated(std::size_t n) const;
  /// Exact division of every coefficient; throws SeriesError when some coefficient is not divisible.
  IntPoly divided_exact(const BigInt& d) const;
  /// Division by the variable; throws SeriesError when the constant term is nonzero.
  IntPoly divided_by_variable() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& s);
  /// this += a * b, the hot loop of series multiplication.
  void add_product(const IntPoly& a, const IntPoly& b);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Human-readable form in the given variable, e.g. "4 + x + 2x^2".
  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

/// Polynomial in x; the coefficient ring of every series in t.
using XPoly = IntPoly;

}  // namespace mmp132
