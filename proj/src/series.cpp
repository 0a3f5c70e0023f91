#include "mmp132/series.hpp"

#include <algorithm>

#include "mmp132/errors.hpp"

namespace mmp132 {

TSeries::TSeries(std::size_t order) : order_(order), c_(order + 1) {}

TSeries::TSeries(std::size_t order, std::vector<XPoly> coeffs) : order_(order), c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

TSeries TSeries::constant(std::size_t order, const XPoly& c) {
  TSeries s(order);
  s.c_[0] = c;
  return s;
}

TSeries TSeries::monomial(std::size_t order, std::size_t k, const XPoly& c) {
  TSeries s(order);
  if (k <= order) s.c_[k] = c;
  return s;
}

TSeries TSeries::from_t_poly(std::size_t order, const IntPoly& p) {
  TSeries s(order);
  const auto cs = p.coeffs();
  for (std::size_t n = 0; n < cs.size() && n <= order; ++n) s.c_[n] = XPoly(cs[n]);
  return s;
}

const XPoly& TSeries::operator[](std::size_t n) const {
  if (n > order_)
    throw SeriesError("t^" + std::to_string(n) + " is beyond the series order " + std::to_string(order_));
  return c_[n];
}

BigInt TSeries::coeff(std::size_t n, std::size_t r) const { return (*this)[n].coeff(r); }

void TSeries::set(std::size_t n, XPoly value) {
  if (n > order_) throw SeriesError("t^" + std::to_string(n) + " is beyond the series order");
  c_[n] = std::move(value);
}

TSeries TSeries::truncated(std::size_t order) const {
  if (order > order_) throw SeriesError("cannot raise the order of a truncated series");
  return TSeries(order, std::vector<XPoly>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TSeries TSeries::specialize_x0() const {
  TSeries s(order_);
  for (std::size_t n = 0; n <= order_; ++n) s.c_[n] = XPoly(c_[n].coeff(0));
  return s;
}

TSeries TSeries::specialize_x(const BigInt& value) const {
  TSeries s(order_);
  for (std::size_t n = 0; n <= order_; ++n) s.c_[n] = XPoly(c_[n].eval(value));
  return s;
}

std::vector<BigInt> TSeries::x0_sequence() const {
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (const auto& p : c_) out.push_back(p.coeff(0));
  return out;
}

TSeries TSeries::substitute_tx() const {
  TSeries s(order_);
  for (std::size_t n = 0; n <= order_; ++n) s.c_[n] = c_[n].shifted(n);
  return s;
}

TSeries TSeries::shifted(std::size_t k) const {
  TSeries s(order_);
  for (std::size_t n = k; n <= order_; ++n) s.c_[n] = c_[n - k];
  return s;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  if (o.order_ < order_) {
    order_ = o.order_;
    c_.resize(order_ + 1);
  }
  for (std::size_t n = 0; n <= order_; ++n) c_[n] += o.c_[n];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  if (o.order_ < order_) {
    order_ = o.order_;
    c_.resize(order_ + 1);
  }
  for (std::size_t n = 0; n <= order_; ++n) c_[n] -= o.c_[n];
  return *this;
}

TSeries& TSeries::operator*=(const XPoly& s) {
  for (auto& p : c_) p = p * s;
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  const std::size_t order = std::min(a.order_, b.order_);
  TSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out.c_[i + j].add_product(a.c_[i], b.c_[j]);
  }
  return out;
}

TSeries TSeries::operator-() const {
  TSeries s(order_);
  for (std::size_t n = 0; n <= order_; ++n) s.c_[n] = -c_[n];
  return s;
}

bool TSeries::agrees_with(const TSeries& o) const {
  const std::size_t order = std::min(order_, o.order_);
  for (std::size_t n = 0; n <= order; ++n)
    if (c_[n] != o.c_[n]) return false;
  return true;
}

std::string TSeries::to_string() const {
  std::string out;
  for (std::size_t n = 0; n <= order_; ++n) {
    const XPoly& p = c_[n];
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool bare = p.is_constant();
    if (n == 0 || !(bare && p.coeff(0) == 1)) out += bare ? p.to_string() : "(" + p.to_string() + ")";
    if (n >= 1) out += "t";
    if (n >= 2) out += "^" + std::to_string(n);
  }
  out += (out.empty() ? "O(t^" : " + O(t^") + std::to_string(order_ + 1) + ")";
  return out;
}

namespace {

bool is_unit(const XPoly& p) { return p.is_constant() && !p.is_zero() && (p.coeff(0) == 1 || p.coeff(0) == -1); }

}  // namespace

TSeries reciprocal(const TSeries& a) {
  const XPoly& a0 = a[0];
  if (!is_unit(a0)) throw SeriesError("reciprocal needs a constant term of +1 or -1, got " + a0.to_string());
  const BigInt inv = a0.coeff(0);  // 1/(+-1) = +-1
  const std::size_t order = a.order();
  std::vector<XPoly> b(order + 1);
  b[0] = XPoly(inv);
  for (std::size_t n = 1; n <= order; ++n) {
    XPoly acc;
    for (std::size_t i = 1; i <= n; ++i) acc.add_product(a[i], b[n - i]);
    b[n] = acc * BigInt(-inv);
  }
  return TSeries(order, std::move(b));
}

TSeries sqrt_unit(const TSeries& a) {
  if (a[0] != XPoly(BigInt(1))) throw SeriesError("sqrt_unit needs constant term 1, got " + a[0].to_string());
  const std::size_t order = a.order();
  std::vector<XPoly> b(order + 1);
  b[0] = XPoly(BigInt(1));
  for (std::size_t n = 1; n <= order; ++n) {
    XPoly acc = a[n];
    XPoly cross;
    for (std::size_t i = 1; i < n; ++i) cross.add_product(b[i], b[n - i]);
    acc -= cross;
    b[n] = acc.divided_exact(2);
  }
  return TSeries(order, std::move(b));
}

TSeries solve_quadratic_fixed_point(const TSeries& A, const TSeries& u) {
  if (A[0] != XPoly(BigInt(1))) throw SeriesError("quadratic solve needs A(0) = 1");
  if (!u[0].is_zero()) throw SeriesError("quadratic solve needs u(0) = 0");
  const std::size_t order = std::min(A.order(), u.order());
  std::vector<XPoly> q(order + 1);
  std::vector<XPoly> sq(order + 1);  // coefficients of Q^2, filled one step behind q
  q[0] = XPoly(BigInt(1));
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t i = 0; i <= n - 1; ++i) sq[n - 1].add_product(q[i], q[n - 1 - i]);
    XPoly rhs;
    for (std::size_t j = 1; j <= n; ++j) rhs.add_product(u[j], sq[n - j]);
    XPoly known;
    for (std::size_t i = 1; i <= n; ++i) known.add_product(A[i], q[n - i]);
    q[n] = rhs - known;
  }
  return TSeries(order, std::move(q));
}

TSeries divide_exact_monomial(const TSeries& s, std::size_t t_power, std::size_t x_power, const BigInt& c) {
  if (s.order() < t_power) throw SeriesError("series order too small for division by t^" + std::to_string(t_power));
  for (std::size_t n = 0; n < t_power; ++n)
    if (!s[n].is_zero()) throw SeriesError("series not divisible by t^" + std::to_string(t_power));
  const std::size_t order = s.order() - t_power;
  TSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    XPoly p = s[n + t_power];
    for (std::size_t k = 0; k < x_power; ++k) p = p.divided_by_variable();
    out.set(n, p.divided_exact(c));
  }
  return out;
}

BigInt catalan(std::size_t n) {
  return binomial(static_cast<long long>(2 * n), static_cast<long long>(n)) / (n + 1);
}

TSeries catalan_series(std::size_t order) {
  TSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) s.set(n, XPoly(catalan(n)));
  return s;
}

TSeries catalan_of_tx(std::size_t order) { return catalan_series(order).substitute_tx(); }

IntPoly catalan_prefix(std::size_t count) {
  std::vector<BigInt> c;
  c.reserve(count);
  for (std::size_t j = 0; j < count; ++j) c.push_back(catalan(j));
  return IntPoly(std::move(c));
}

RationalGF::RationalGF(IntPoly n, IntPoly d) : num(std::move(n)), den(std::move(d)) {
  const BigInt d0 = den.coeff(0);
  if (d0 != 1 && d0 != -1) throw SeriesError("rational generating function needs den(0) = +1 or -1");
}

TSeries expand_rational(const RationalGF& r, std::size_t order) {
  return TSeries::from_t_poly(order, r.num) * reciprocal(TSeries::from_t_poly(order, r.den));
}

}  // namespace mmp132
