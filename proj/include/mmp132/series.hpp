#pragma once

// Truncated power series in t whose coefficients are polynomials in x.
//
// A series of order N stores the coefficients of t^0..t^N exactly. Binary operations
// produce a result whose order is the smaller operand order. Series that do not depend on
// x (the x = 0 work, rational generating functions) are ordinary TSeries whose
// coefficients happen to be constants, so every code path shares one kernel.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mmp132/bigint.hpp"
#include "mmp132/poly.hpp"

namespace mmp132 {

/// Default truncation order used by the verification suites.
inline constexpr std::size_t kDefaultOrder = 20;

class TSeries {
 public:
  /// The zero series of the given order.
  explicit TSeries(std::size_t order = 0);
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  TSeries(std::size_t order, std::vector<XPoly> coeffs);

  static TSeries one(std::size_t order) { return constant(order, XPoly(BigInt(1))); }
  static TSeries constant(std::size_t order, const XPoly& c);
  /// c * t^k (zero when k > order).
  static TSeries monomial(std::size_t order, std::size_t k, const XPoly& c = XPoly(BigInt(1)));
  /// Integer polynomial in t, coefficients in ascending powers.
  static TSeries from_t_poly(std::size_t order, const IntPoly& p);

  std::size_t order() const { return order_; }

  /// Coefficient of t^n. Throws SeriesError when n > order().
  const XPoly& operator[](std::size_t n) const;
  /// Coefficient of x^r t^n. Throws SeriesError when n > order().
  BigInt coeff(std::size_t n, std::size_t r) const;
  void set(std::size_t n, XPoly value);
  std::span<const XPoly> coeffs() const { return c_; }

  TSeries truncated(std::size_t order) const;
  /// Keeps only the x^0 part of every coefficient.
  TSeries specialize_x0() const;
  /// Evaluates every coefficient at x = value; the result is constant in x.
  TSeries specialize_x(const BigInt& value) const;
  /// The integer sequence of a series that is constant in x; x-dependence is dropped.
  std::vector<BigInt> x0_sequence() const;
  /// Substitutes t -> t*x: the t^n coefficient gets multiplied by x^n.
  TSeries substitute_tx() const;
  /// Multiplies by t^k, dropping terms past the order.
  TSeries shifted(std::size_t k) const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const XPoly& s);

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const XPoly& s) { return a *= s; }
  friend TSeries operator*(const XPoly& s, TSeries a) { return a *= s; }
  TSeries operator-() const;

  /// Same order and same coefficients.
  friend bool operator==(const TSeries&, const TSeries&) = default;
  /// Agreement of coefficients t^0..t^n for n = min of the orders.
  bool agrees_with(const TSeries& o) const;

  std::string to_string() const;

 private:
  std::size_t order_ = 0;
  std::vector<XPoly> c_;
};

/// 1/a. The constant term must be +1 or -1. Throws SeriesError otherwise.
TSeries reciprocal(const TSeries& a);

/// The square root with constant term 1 of a series with constant term 1. Throws
/// SeriesError when the constant term is not 1 or the root has non-integral coefficients.
TSeries sqrt_unit(const TSeries& a);

/// The unique root Q with Q(0) = 1 of u*Q^2 - A*Q + 1 = 0, built order by order from
/// Q = (1 + u*Q^2)/A. Requires A(0) = 1 and u(0) = 0.
TSeries solve_quadratic_fixed_point(const TSeries& A, const TSeries& u);

/// Divides by c * t^a * x^b where the division is exact; the result has order
/// `s.order() - a`. Throws SeriesError on a nonzero remainder.
TSeries divide_exact_monomial(const TSeries& s, std::size_t t_power, std::size_t x_power, const BigInt& c);

/// n-th Catalan number.
BigInt catalan(std::size_t n);

/// C(t) = sum C_n t^n up to t^order.
TSeries catalan_series(std::size_t order);

/// C(tx): coefficient of t^n is C_n x^n.
TSeries catalan_of_tx(std::size_t order);

/// C_0 + C_1 t + ... + C_{count-1} t^{count-1} as a t-polynomial (zero when count = 0).
IntPoly catalan_prefix(std::size_t count);

/// A pair (num, den) of integer polynomials in t; den(0) must be +1 or -1.
struct RationalGF {
  IntPoly num;
  IntPoly den;

  RationalGF() = default;
  /// Throws SeriesError unless den(0) is a unit.
  RationalGF(IntPoly num, IntPoly den);

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// num * (1/den) truncated at order.
TSeries expand_rational(const RationalGF& r, std::size_t order);

}  // namespace mmp132
