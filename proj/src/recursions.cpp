#include "mmp132/recursions.hpp"

#include <algorithm>

#include "mmp132/errors.hpp"
#include "mmp132/series.hpp"

namespace mmp132 {

namespace {

XPoly indicator_shift(bool on) { return on ? XPoly{0, 1} : XPoly{1}; }

XPoly constant(const BigInt& c) { return XPoly(c); }

}  // namespace

std::vector<XPoly> RecursionEngine::rows(const PatternSpec& p, int n_max) {
  if (n_max < 0) throw InvalidInput("n_max must be non-negative");
  GfKey key = classify(p);
  // Mirrored shapes are the same polynomials; compute the direct side.
  if (key.shape == Shape::KL00) key.shape = Shape::K00L;
  if (key.shape == Shape::ZZLK) {
    key.shape = Shape::ZKL0;
    std::swap(key.k, key.l);
  }
  std::lock_guard lock(mu_);
  const auto& r = rows_locked(key.shape, key.k, key.l, n_max);
  return {r.begin(), r.begin() + n_max + 1};
}

const std::vector<XPoly>& RecursionEngine::rows_locked(Shape s, int k, int l, int n_max) {
  // Degenerate parameters fall back to the smaller shape.
  if ((s == Shape::K000 || s == Shape::ZK00 || s == Shape::ZZK0 || s == Shape::ZZZK) && k == 0) s = Shape::Zero;
  if (s == Shape::K0L0 && k == 0) { s = Shape::ZZK0; k = l; l = 0; }
  if (s == Shape::K0L0 && l == 0) s = Shape::K000;
  if (s == Shape::K00L && k == 0) { s = Shape::ZZZK; k = l; l = 0; }
  if (s == Shape::K00L && l == 0) s = Shape::K000;
  if (s == Shape::ZKL0 && k == 0) { s = Shape::ZZK0; k = l; l = 0; }
  if (s == Shape::ZKL0 && l == 0) s = Shape::ZK00;
  if (s == Shape::ZK0L && k == 0) { s = Shape::ZZZK; k = l; l = 0; }
  if (s == Shape::ZK0L && l == 0) s = Shape::ZK00;
  if (s == Shape::Zero) k = l = 0;
  if (s == Shape::K000 || s == Shape::ZK00 || s == Shape::ZZK0 || s == Shape::ZZZK) l = 0;

  const auto key = std::make_tuple(s, k, l);
  auto it = memo_.find(key);
  if (it != memo_.end() && static_cast<int>(it->second.size()) > n_max) return it->second;
  auto built = build(s, k, l, n_max);
  return memo_[key] = std::move(built);
}

std::vector<XPoly> RecursionEngine::build(Shape s, int k, int l, int n_max) {
  std::vector<XPoly> q(static_cast<std::size_t>(n_max) + 1);
  auto C = [](int j) { return catalan(static_cast<std::size_t>(j)); };
  // Sub-tables are fetched by value: rows_locked may rehash memo_.
  auto sub = [&](Shape s2, int k2, int l2) { return rows_locked(s2, k2, l2, n_max); };

  switch (s) {
    case Shape::Zero:
      for (int n = 0; n <= n_max; ++n) q[n] = XPoly::monomial(C(n), static_cast<std::size_t>(n));
      return q;

    case Shape::K000: {
      const auto P = sub(Shape::K000, k - 1, 0);
      q[0] = XPoly{1};
      for (int n = 1; n <= n_max; ++n)
        for (int i = 1; i <= n; ++i) q[n].add_product(P[i - 1], q[n - i]);
      return q;
    }

    case Shape::ZZK0:
      q[0] = XPoly{1};
      for (int n = 1; n <= n_max; ++n)
        for (int i = 1; i <= n; ++i) q[n].add_product(indicator_shift(i - 1 >= k) * q[i - 1], q[n - i]);
      return q;

    case Shape::ZK00: {
      q[0] = XPoly{1};
      std::vector<std::vector<XPoly>> right(static_cast<std::size_t>(k));
      for (int m = 0; m < k; ++m) right[m] = sub(Shape::ZK00, m, 0);
      for (int n = 1; n <= n_max; ++n)
        for (int i = 1; i <= n; ++i) {
          const int need = std::max(k - i, 0);
          const XPoly& r = need == k ? q[n - i] : right[need][n - i];
          q[n].add_product(q[i - 1], r);
        }
      return q;
    }

    case Shape::ZZZK: {
      q[0] = XPoly{1};
      std::vector<std::vector<XPoly>> left(static_cast<std::size_t>(k));
      for (int m = 0; m < k; ++m) left[m] = sub(Shape::ZZZK, m, 0);
      for (int n = 1; n <= n_max; ++n)
        for (int i = 1; i <= n; ++i) {
          const int need = std::max(k - (n - i), 0);
          const XPoly& a = need == k ? q[i - 1] : left[need][i - 1];
          q[n].add_product(indicator_shift(n - i >= k) * a, q[n - i]);
        }
      return q;
    }

    case Shape::K0L0: {
      const auto P = sub(Shape::K0L0, k - 1, l);
      q[0] = XPoly{1};
      for (int n = 1; n <= n_max; ++n)
        for (int i = 1; i <= n; ++i) q[n].add_product(P[i - 1], q[n - i]);
      return q;
    }

    case Shape::K00L: {
      const auto P = sub(Shape::K000, k - 1, 0);
      std::vector<std::vector<XPoly>> lower(static_cast<std::size_t>(l) + 1);
      for (int m = 1; m <= l; ++m) lower[m] = sub(Shape::K00L, k - 1, m);
      for (int n = 0; n <= n_max; ++n) {
        if (n <= l) {
          q[n] = constant(C(n));
          continue;
        }
        for (int i = 1; i <= n - l; ++i) q[n].add_product(P[i - 1], q[n - i]);
        for (int j = 0; j <= l - 1; ++j) q[n] += lower[l - j][n - j - 1] * C(j);
      }
      return q;
    }

    case Shape::ZKL0: {
      const auto H = sub(Shape::ZZK0, l, 0);
      std::vector<std::vector<XPoly>> lower(static_cast<std::size_t>(k));
      for (int m = 1; m < k; ++m) lower[m] = sub(Shape::ZKL0, m, l);
      q[0] = XPoly{1};
      for (int n = 1; n <= n_max; ++n) {
        for (int i = k; i <= n; ++i) q[n].add_product(q[i - 1], H[n - i]);
        for (int i = 1; i <= std::min(k - 1, n); ++i) q[n] += lower[k - i][n - i] * C(i - 1);
      }
      return q;
    }

    case Shape::ZK0L: {
      const auto K = sub(Shape::ZK00, k, 0);
      const auto L = sub(Shape::ZZZK, l, 0);
      std::vector<std::vector<XPoly>> fewer_k(static_cast<std::size_t>(k));
      for (int m = 1; m < k; ++m) fewer_k[m] = sub(Shape::ZK0L, m, l);
      std::vector<std::vector<XPoly>> fewer_l(static_cast<std::size_t>(l));
      for (int m = 1; m < l; ++m) fewer_l[m] = sub(Shape::ZK0L, k, m);
      for (int n = 0; n <= n_max; ++n) {
        if (n < k + l) {
          q[n] = constant(C(n));
          continue;
        }
        for (int i = 1; i <= k - 1; ++i) q[n] += fewer_k[k - i][n - i] * C(i - 1);
        for (int i = k; i <= n - l; ++i) q[n].add_product(K[i - 1], L[n - i]);
        // j = 0 is the unreduced table itself: right block empty, n at the end.
        q[n] += q[n - 1];
        for (int j = 1; j <= l - 1; ++j) q[n] += fewer_l[l - j][n - j - 1] * C(j);
      }
      return q;
    }

    default:
      break;
  }
  throw UnsupportedPattern("no recurrence for shape " + shape_name(s));
}

RecursionReport recursion_check(const PatternSpec& p, int n_max, GfEngine& gf, TableCache& oracle,
                                RecursionEngine& rec) {
  RecursionReport rep;
  rep.pattern = p;
  rep.n_max = n_max;
  const auto r = rec.rows(p, n_max);
  const TSeries s = gf.dispatch(p, static_cast<std::size_t>(n_max));
  for (int n = 0; n <= n_max; ++n) {
    const XPoly o = oracle.row(p, n);
    const XPoly& a = r[n];
    const XPoly& b = s[static_cast<std::size_t>(n)];
    std::optional<std::pair<RouteValue, RouteValue>> bad;
    if (a != o)
      bad = {{"recursion", a}, {"oracle", o}};
    else if (b != o)
      bad = {{"series", b}, {"oracle", o}};
    if (bad) {
      rep.agree = false;
      rep.mismatch_n = n;
      rep.route_a = bad->first;
      rep.route_b = bad->second;
      break;
    }
  }
  return rep;
}

}  // namespace mmp132
