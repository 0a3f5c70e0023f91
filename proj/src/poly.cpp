#include "mmp132/poly.hpp"

#include <algorithm>

#include "mmp132/errors.hpp"

namespace mmp132 {

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(const BigInt& c) {
  if (c != 0) c_.push_back(c);
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
  if (c == 0) return {};
  IntPoly p;
  p.c_.assign(exponent + 1, BigInt(0));
  p.c_[exponent] = c;
  return p;
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::eval(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

BigInt IntPoly::sum() const {
  BigInt acc = 0;
  for (const auto& v : c_) acc += v;
  return acc;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly out;
  out.c_.reserve(c_.size() + k);
  out.c_.assign(k, BigInt(0));
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

IntPoly IntPoly::truncated(std::size_t n) const {
  if (c_.size() <= n) return *this;
  return IntPoly(std::vector<BigInt>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
}

IntPoly IntPoly::divided_exact(const BigInt& d) const {
  if (d == 0) throw SeriesError("division by zero");
  IntPoly out = *this;
  for (auto& v : out.c_) {
    if (v % d != 0) throw SeriesError("coefficient " + v.str() + " not divisible by " + d.str());
    v /= d;
  }
  return out;
}

IntPoly IntPoly::divided_by_variable() const {
  if (is_zero()) return {};
  if (c_.front() != 0) throw SeriesError("polynomial has a nonzero constant term; not divisible by the variable");
  return IntPoly(std::vector<BigInt>(c_.begin() + 1, c_.end()));
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

void IntPoly::add_product(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t need = a.c_.size() + b.c_.size() - 1;
  if (c_.size() < need) c_.resize(need);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c_[i + j] += a.c_[i] * b.c_[j];
  }
  normalize();
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  out.add_product(a, b);
  return out;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const BigInt& v = c_[i];
    if (v == 0) continue;
    BigInt mag = v < 0 ? BigInt(-v) : v;
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace mmp132
