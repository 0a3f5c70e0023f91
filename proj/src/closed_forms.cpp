#include "mmp132/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <random>

#include "mmp132/errors.hpp"

namespace mmp132 {

namespace {

int A(const PatternSpec& p) { return p.a().min(); }
int B(const PatternSpec& p) { return p.b().min(); }
int Cq(const PatternSpec& p) { return p.c().min(); }
int D(const PatternSpec& p) { return p.d().min(); }

BigInt cat(long long n) { return catalan(static_cast<std::size_t>(n)); }
BigInt binom(long long n, long long k) { return binomial(n, k); }

// Zero exactly where at_least is 0, otherwise at least that value; no EMPTY.
bool shaped(const PatternSpec& p, std::array<int, 4> at_least) {
  if (p.has_empty()) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    const int v = p.coords[i].min();
    if (at_least[i] == 0 ? v != 0 : v < at_least[i]) return false;
  }
  return true;
}

std::vector<PatternSpec> grid(auto make, int k_from, int k_to, int l_from, int l_to) {
  std::vector<PatternSpec> out;
  for (int k = k_from; k <= k_to; ++k)
    for (int l = l_from; l <= l_to; ++l) out.push_back(make(k, l));
  return out;
}

std::vector<CoeffFormula> make_registry() {
  std::vector<CoeffFormula> r;
  const PatternSpec p1010{1, 0, 1, 0}, p1001{1, 0, 0, 1}, p0101{0, 1, 0, 1}, p0110{0, 1, 1, 0}, p0210{0, 2, 1, 0};

  r.push_back({"q1010_x0", FormulaKind::Fixed, "Q_n^(1,0,1,0)(0) = 2^(n-1), n >= 1", false,
               [=](const PatternSpec& p) { return p == p1010; }, [](const PatternSpec&) { return 1; }, nullptr,
               [](const PatternSpec&, int) { return 0LL; },
               [](const PatternSpec&, int n) { return pow2(static_cast<unsigned>(n - 1)); }, {p1010}});

  r.push_back({"q1010_x1", FormulaKind::Fixed, "[x] Q_n^(1,0,1,0) = (n-3) 2^(n-2) + 1, n >= 3", false,
               [=](const PatternSpec& p) { return p == p1010; }, [](const PatternSpec&) { return 3; }, nullptr,
               [](const PatternSpec&, int) { return 1LL; },
               [](const PatternSpec&, int n) { return BigInt(n - 3) * pow2(static_cast<unsigned>(n - 2)) + 1; },
               {p1010}});

  r.push_back({"k010_second", FormulaKind::Second, "[x^(n-2-k)] Q_n^(k,0,1,0) = 2k + binom(n-k,2), n >= k+3",
               false, [](const PatternSpec& p) { return shaped(p, {1, 0, 1, 0}) && Cq(p) == 1; },
               [](const PatternSpec& p) { return A(p) + 3; }, nullptr,
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - 2 - A(p)); },
               [](const PatternSpec& p, int n) { return BigInt(2 * A(p)) + binom(n - A(p), 2); },
               grid([](int k, int) { return PatternSpec{k, 0, 1, 0}; }, 1, 4, 1, 1)});

  r.push_back({"k0m0_second", FormulaKind::Second,
               "[x^(n-m-k-1)] Q_n^(k,0,m,0) = C_(m+1) + (2k+1) C_m + 2 C_m (n-k-m-2), m >= 2, n >= m+k+2", false,
               [](const PatternSpec& p) { return shaped(p, {1, 0, 2, 0}); },
               [](const PatternSpec& p) { return A(p) + Cq(p) + 2; }, nullptr,
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - Cq(p) - A(p) - 1); },
               [](const PatternSpec& p, int n) {
                 const int k = A(p), m = Cq(p);
                 return cat(m + 1) + BigInt(2 * k + 1) * cat(m) + 2 * cat(m) * (n - k - m - 2);
               },
               grid([](int k, int m) { return PatternSpec{k, 0, m, 0}; }, 1, 3, 2, 3)});

  r.push_back({"k0l0_top", FormulaKind::Highest, "top of Q_n^(k,0,l,0) is C_l x^(n-k-l), n >= k+l+1", false,
               [](const PatternSpec& p) { return shaped(p, {1, 0, 1, 0}); },
               [](const PatternSpec& p) { return A(p) + Cq(p) + 1; }, nullptr,
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - A(p) - Cq(p)); },
               [](const PatternSpec& p, int) { return cat(Cq(p)); },
               grid([](int k, int l) { return PatternSpec{k, 0, l, 0}; }, 1, 3, 1, 3)});

  // Same boundary effect as 01l0_top below: at n = k+1 nothing matches and Q_n = C_n,
  // which equals (k+1) C_0 only for k = 1.
  r.push_back({"k001_top", FormulaKind::Highest, "top of Q_n^(k,0,0,1) is (k+1) C_(n-k-1) x^(n-k-1), n >= k+2",
               false, [](const PatternSpec& p) { return shaped(p, {1, 0, 0, 1}) && D(p) == 1; },
               [](const PatternSpec& p) { return A(p) + 2; }, [](const PatternSpec& p) { return A(p) + 1; },
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - A(p) - 1); },
               [](const PatternSpec& p, int n) { return BigInt(A(p) + 1) * cat(n - A(p) - 1); },
               grid([](int k, int) { return PatternSpec{k, 0, 0, 1}; }, 1, 4, 1, 1)});

  r.push_back({"k002_top", FormulaKind::Highest,
               "top of Q_n^(k,0,0,2) is 5 C_(n-3), 9 C_(n-4), 14 C_(n-5) for k = 1, 2, 3", false,
               [](const PatternSpec& p) { return shaped(p, {1, 0, 0, 2}) && D(p) == 2 && A(p) <= 3; },
               [](const PatternSpec& p) { return A(p) + 3; }, nullptr,
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - A(p) - 2); },
               [](const PatternSpec& p, int n) {
                 static const int mult[] = {0, 5, 9, 14};
                 return BigInt(mult[A(p)]) * cat(n - A(p) - 2);
               },
               grid([](int k, int) { return PatternSpec{k, 0, 0, 2}; }, 1, 3, 2, 2)});

  r.push_back({"k002_top_general", FormulaKind::Highest,
               "observed: top of Q_n^(k,0,0,2) is (binom(k+3,2) - 1) C_(n-k-2), n >= k+3", true,
               [](const PatternSpec& p) { return shaped(p, {1, 0, 0, 2}) && D(p) == 2; },
               [](const PatternSpec& p) { return A(p) + 3; }, nullptr,
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - A(p) - 2); },
               [](const PatternSpec& p, int n) { return (binom(A(p) + 3, 2) - 1) * cat(n - A(p) - 2); },
               grid([](int k, int) { return PatternSpec{k, 0, 0, 2}; }, 1, 5, 2, 2)});

  r.push_back({"1001_x0", FormulaKind::Fixed, "Q_n^(1,0,0,1)(0) = n, n >= 1", false,
               [=](const PatternSpec& p) { return p == p1001; }, [](const PatternSpec&) { return 1; }, nullptr,
               [](const PatternSpec&, int) { return 0LL; }, [](const PatternSpec&, int n) { return BigInt(n); },
               {p1001}});

  r.push_back({"1001_x1", FormulaKind::Fixed, "[x] Q_n^(1,0,0,1) = (n-1)(n-2), n >= 3", false,
               [=](const PatternSpec& p) { return p == p1001; }, [](const PatternSpec&) { return 3; }, nullptr,
               [](const PatternSpec&, int) { return 1LL; },
               [](const PatternSpec&, int n) { return BigInt(n - 1) * (n - 2); }, {p1001}});

  r.push_back({"1001_third", FormulaKind::Second, "[x^(n-3)] Q_n^(1,0,0,1) = 3 C_(n-2), n >= 3", false,
               [=](const PatternSpec& p) { return p == p1001; }, [](const PatternSpec&) { return 3; }, nullptr,
               [](const PatternSpec&, int n) { return static_cast<long long>(n - 3); },
               [](const PatternSpec&, int n) { return 3 * cat(n - 2); }, {p1001}});

  // At n = l+1 no position can match, so Q_n = C_(l+1) and the stated top C_l only
  // starts one step later.
  r.push_back({"01l0_top", FormulaKind::Highest, "top of Q_n^(0,1,l,0) is C_l x^(n-l-1), n >= l+2", false,
               [](const PatternSpec& p) { return shaped(p, {0, 1, 1, 0}) && B(p) == 1; },
               [](const PatternSpec& p) { return Cq(p) + 2; }, [](const PatternSpec& p) { return Cq(p) + 1; },
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - Cq(p) - 1); },
               [](const PatternSpec& p, int) { return cat(Cq(p)); },
               grid([](int, int l) { return PatternSpec{0, 1, l, 0}; }, 1, 1, 1, 4)});

  r.push_back({"0110_second", FormulaKind::Second, "[x^(n-3)] Q_n^(0,1,1,0) = 2 + binom(n-1,2), n >= 4", false,
               [=](const PatternSpec& p) { return p == p0110; }, [](const PatternSpec&) { return 4; }, nullptr,
               [](const PatternSpec&, int n) { return static_cast<long long>(n - 3); },
               [](const PatternSpec&, int n) { return 2 + binom(n - 1, 2); }, {p0110}});

  r.push_back({"01l0_second", FormulaKind::Second,
               "[x^(n-l-2)] Q_n^(0,1,l,0) = C_(l+1) + C_l + 2 C_l (n-2-l), l >= 2, n >= l+3", false,
               [](const PatternSpec& p) { return shaped(p, {0, 1, 2, 0}) && B(p) == 1; },
               [](const PatternSpec& p) { return Cq(p) + 3; }, nullptr,
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - Cq(p) - 2); },
               [](const PatternSpec& p, int n) {
                 const int l = Cq(p);
                 return cat(l + 1) + cat(l) + 2 * cat(l) * (n - 2 - l);
               },
               grid([](int, int l) { return PatternSpec{0, 1, l, 0}; }, 1, 1, 2, 4)});

  r.push_back({"02l0_top", FormulaKind::Highest, "top of Q_n^(0,2,l,0) is 2 C_l x^(n-2-l), n >= l+3", false,
               [](const PatternSpec& p) { return shaped(p, {0, 2, 1, 0}) && B(p) == 2; },
               [](const PatternSpec& p) { return Cq(p) + 3; }, nullptr,
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - 2 - Cq(p)); },
               [](const PatternSpec& p, int) { return 2 * cat(Cq(p)); },
               grid([](int, int l) { return PatternSpec{0, 2, l, 0}; }, 1, 1, 1, 4)});

  r.push_back({"0210_second", FormulaKind::Second, "[x^(n-4)] Q_n^(0,2,1,0) = 6 + 2 binom(n-2,2), n >= 5", false,
               [=](const PatternSpec& p) { return p == p0210; }, [](const PatternSpec&) { return 5; }, nullptr,
               [](const PatternSpec&, int n) { return static_cast<long long>(n - 4); },
               [](const PatternSpec&, int n) { return 6 + 2 * binom(n - 2, 2); }, {p0210}});

  r.push_back({"02l0_second", FormulaKind::Second,
               "[x^(n-3-l)] Q_n^(0,2,l,0) = 2 C_(l+1) + 8 C_l + 4 C_l (n-4-l), l >= 2, n >= l+4", false,
               [](const PatternSpec& p) { return shaped(p, {0, 2, 2, 0}) && B(p) == 2; },
               [](const PatternSpec& p) { return Cq(p) + 4; }, nullptr,
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - 3 - Cq(p)); },
               [](const PatternSpec& p, int n) {
                 const int l = Cq(p);
                 return 2 * cat(l + 1) + 8 * cat(l) + 4 * cat(l) * (n - 4 - l);
               },
               grid([](int, int l) { return PatternSpec{0, 2, l, 0}; }, 1, 1, 2, 4)});

  r.push_back({"0k0l_top", FormulaKind::Highest, "top of Q_n^(0,k,0,l) is C_k C_l C_(n-k-l) x^(n-k-l), n >= k+l+1",
               false, [](const PatternSpec& p) { return shaped(p, {0, 1, 0, 1}); },
               [](const PatternSpec& p) { return B(p) + D(p) + 1; }, nullptr,
               [](const PatternSpec& p, int n) { return static_cast<long long>(n - B(p) - D(p)); },
               [](const PatternSpec& p, int n) { return cat(B(p)) * cat(D(p)) * cat(n - B(p) - D(p)); },
               grid([](int k, int l) { return PatternSpec{0, k, 0, l}; }, 1, 3, 1, 3)});

  r.push_back({"0101_second", FormulaKind::Second, "[x^(n-3)] Q_n^(0,1,0,1) = 2 C_(n-2) + C_(n-3), n >= 4", false,
               [=](const PatternSpec& p) { return p == p0101; }, [](const PatternSpec&) { return 4; }, nullptr,
               [](const PatternSpec&, int n) { return static_cast<long long>(n - 3); },
               [](const PatternSpec&, int n) { return 2 * cat(n - 2) + cat(n - 3); }, {p0101}});

  r.push_back({"0101_x0", FormulaKind::Fixed, "Q_n^(0,1,0,1)(0) = 1 + binom(n,2), n >= 2", false,
               [=](const PatternSpec& p) { return p == p0101; }, [](const PatternSpec&) { return 2; }, nullptr,
               [](const PatternSpec&, int) { return 0LL; }, [](const PatternSpec&, int n) { return 1 + binom(n, 2); },
               {p0101}});
  return r;
}

CoeffPrediction lookup(FormulaKind kind, const PatternSpec& p, int n, std::optional<long long> fixed_exponent) {
  for (const PatternSpec& q : {p, p.mirrored()}) {
    for (const auto& f : formula_registry()) {
      if (f.kind != kind || f.conjecture || !f.covers(q)) continue;
      if (fixed_exponent && f.exponent(q, f.threshold(q)) != *fixed_exponent) continue;
      return evaluate(f, q, n);
    }
  }
  throw NotCovered("no registered formula for pattern " + p.to_string());
}

}  // namespace

const std::vector<CoeffFormula>& formula_registry() {
  static const std::vector<CoeffFormula> r = make_registry();
  return r;
}

const CoeffFormula& formula(std::string_view id) {
  for (const auto& f : formula_registry())
    if (f.id == id) return f;
  throw NotCovered("unknown formula '" + std::string(id) + "'");
}

CoeffPrediction evaluate(const CoeffFormula& f, const PatternSpec& p, int n) {
  if (!f.covers(p)) throw NotCovered("formula " + f.id + " does not apply to " + p.to_string());
  const int from = f.threshold(p);
  if (n < from)
    throw BelowThreshold("formula " + f.id + " needs n >= " + std::to_string(from) + ", got " + std::to_string(n));
  return {f.exponent(p, n), f.value(p, n)};
}

CoeffPrediction highest_coeff(const PatternSpec& p, int n) { return lookup(FormulaKind::Highest, p, n, {}); }

CoeffPrediction second_coeff(const PatternSpec& p, int n) { return lookup(FormulaKind::Second, p, n, {}); }

BigInt special_count(const PatternSpec& p, int n, std::size_t r) {
  return lookup(FormulaKind::Fixed, p, n, static_cast<long long>(r)).value;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Match: return "match";
    case CheckStatus::Mismatch: return "mismatch";
    case CheckStatus::BelowThreshold: return "below-threshold";
  }
  return "?";
}

std::vector<FormulaCheck> verify_formulas(int n_max, TableCache& oracle) {
  std::vector<FormulaCheck> out;
  for (const auto& f : formula_registry()) {
    for (const auto& p : f.samples) {
      const int from = f.threshold(p);
      for (int n = 1; n <= n_max; ++n) {
        FormulaCheck c{f.id, p, n, std::nullopt, std::nullopt, CheckStatus::Match, {}};
        const XPoly q = oracle.row(p, n);
        const long long e = f.exponent(p, n);
        if (n < from) {
          c.status = CheckStatus::BelowThreshold;
          // Formulas are not defined below their range in general (negative Catalan
          // indices, 2^(n-2) at n = 1); only the printed-range gap is evaluated.
          if (f.printed_threshold && n >= f.printed_threshold(p) && e >= 0) {
            c.predicted = CoeffPrediction{e, f.value(p, n)};
            c.observed = q.coeff(static_cast<std::size_t>(e));
            if (*c.observed != c.predicted->value)
              c.detail = "inside the printed range but fails: no position can match at this n";
          }
          out.push_back(std::move(c));
          continue;
        }
        c.predicted = CoeffPrediction{e, f.value(p, n)};
        c.observed = e >= 0 ? q.coeff(static_cast<std::size_t>(e)) : BigInt(0);
        bool ok = e >= 0 && *c.observed == c.predicted->value;
        if (ok && f.kind == FormulaKind::Highest && q.degree() != e) {
          ok = false;
          c.detail = "degree " + std::to_string(q.degree()) + " differs from predicted exponent";
        }
        if (ok && f.kind == FormulaKind::Second && q.degree() != e + 1) {
          ok = false;
          c.detail = "predicted exponent is not one below the degree " + std::to_string(q.degree());
        }
        c.status = ok ? CheckStatus::Match : CheckStatus::Mismatch;
        out.push_back(std::move(c));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FormulaCheck& a, const FormulaCheck& b) {
    return std::tie(a.formula_id, a.pattern, a.n) < std::tie(b.formula_id, b.pattern, b.n);
  });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

RationalGF frac(std::initializer_list<long long> num, std::initializer_list<long long> den) {
  return RationalGF(IntPoly(num), IntPoly(den));
}

IntPoly one_minus_t_times(const IntPoly& p) { return IntPoly{1} - p.shifted(1); }

std::vector<GfCatalogEntry> make_catalog() {
  std::vector<GfCatalogEntry> c;
  auto add = [&](PatternSpec p, RationalGF g, std::optional<std::string> oeis = std::nullopt, std::string note = {}) {
    c.push_back({p, std::move(g), std::nullopt, std::move(oeis), std::move(note)});
  };

  // (k,0,0,0) and (k-1,0,1,0) share each fraction.
  const std::vector<RationalGF> k000 = {
      frac({1}, {1, -1}),
      frac({1, -1}, {1, -2}),
      frac({1, -2}, {1, -3, 1}),
      frac({1, -3, 1}, {1, -4, 3}),
      frac({1, -4, 3}, {1, -5, 6, -1}),
      frac({1, -5, 6, -1}, {1, -6, 10, -4}),
  };
  for (int k = 1; k <= 6; ++k) {
    add({k, 0, 0, 0}, k000[k - 1]);
    add({k - 1, 0, 1, 0}, k000[k - 1]);
  }
  // Printed numerator repeats t^3; the recursion forces 10t^2.
  for (const PatternSpec p : {PatternSpec{7, 0, 0, 0}, PatternSpec{6, 0, 1, 0}})
    c.push_back({p, frac({1, -6, 0, 6}, {1, -7, 15, -10, 1}), frac({1, -6, 10, -4}, {1, -7, 15, -10, 1}),
                 std::nullopt, "numerator printed as 1-6t+10t^3-4t^3"});

  add({0, 0, 2, 0}, frac({1}, {1, -1, -1}));
  add({1, 0, 2, 0}, frac({1, -1, -1}, {1, -2, -1}), "A000129", "Pell numbers");
  add({2, 0, 2, 0}, frac({1, -2, -1}, {1, -3, 0, 1}), "A052963");
  add({3, 0, 2, 0}, frac({1, -3, 0, 1}, {1, -4, 2, 2}));
  add({4, 0, 2, 0}, frac({1, -4, 2, 2}, {1, -5, 5, 2, -1}));

  add({0, 0, 3, 0}, frac({1}, {1, -1, -1, -2}));
  add({1, 0, 3, 0}, frac({1, -1, -1, -2}, {1, -2, -1, -2}), "A077938");
  add({2, 0, 3, 0}, frac({1, -2, -1, -2}, {1, -3, 0, -1, 2}));
  add({3, 0, 3, 0}, frac({1, -3, 0, -1, 2}, {1, -4, 2, 0, 4}));
  add({4, 0, 3, 0}, frac({1, -4, 2, 0, 4}, {1, -5, 5, 0, 5, -2}));

  add({1, 0, 0, 1}, frac({1, -1, 1}, {1, -2, 1}));
  add({2, 0, 0, 1}, frac({1, -2, 1, 1}, {1, -3, 2}), "A083329");
  add({3, 0, 0, 1}, frac({1, -3, 2, 0, 1}, {1, -4, 4, -1}));
  add({4, 0, 0, 1}, frac({1, -4, 4, -1, 0, 1}, {1, -5, 7, -3}));
  add({5, 0, 0, 1}, frac({1, -5, 7, -3, 0, 0, 1}, {1, -6, 11, -7, 1}));

  for (int l = 1; l <= 4; ++l) {
    const IntPoly head = catalan_prefix(static_cast<std::size_t>(l));
    const IntPoly P = one_minus_t_times(head);
    const IntPoly R = one_minus_t_times(IntPoly{1} + head);
    add({0, 1, l, 0}, RationalGF(P, R));
    add({0, 2, l, 0}, RationalGF(R * R + (P * P).shifted(1), R * R), std::nullopt, "1 + t (P/R)^2");
  }

  add({0, 1, 0, 0}, frac({1}, {1, -1}));
  add({0, 0, 0, 1}, frac({1}, {1, -1}));
  add({0, 2, 0, 0}, frac({1, -1, 1}, {1, -2, 1}));
  add({0, 0, 0, 2}, frac({1, -1, 1}, {1, -2, 1}));
  add({0, 1, 0, 1}, frac({1, -2, 2}, {1, -3, 3, -1}));
  add({0, 2, 0, 1}, frac({1, -3, 4, -1, 1}, {1, -4, 6, -4, 1}), "A116731");
  add({0, 2, 0, 2}, frac({1, -4, 7, -5, 4, 2}, {1, -5, 10, -10, 5, -1}));
  return c;
}

std::optional<std::size_t> first_difference(const TSeries& a, const TSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  for (std::size_t n = 0; n <= order; ++n)
    if (a[n] != b[n]) return n;
  return std::nullopt;
}

}  // namespace

const std::vector<GfCatalogEntry>& gf_catalog() {
  static const std::vector<GfCatalogEntry> c = make_catalog();
  return c;
}

std::string to_string(CatalogStatus s) {
  switch (s) {
    case CatalogStatus::Match: return "match";
    case CatalogStatus::Erratum: return "erratum";
    case CatalogStatus::Mismatch: return "mismatch";
  }
  return "?";
}

std::vector<CatalogResult> verify_catalog(std::size_t N, GfEngine& gf) {
  std::vector<CatalogResult> out;
  for (const auto& e : gf_catalog()) {
    const TSeries route = gf.dispatch(e.pattern, N).specialize_x0();
    CatalogResult r{e, CatalogStatus::Match, first_difference(expand_rational(e.printed, N), route)};
    if (r.first_difference) {
      const bool fixed = e.corrected && !first_difference(expand_rational(*e.corrected, N), route);
      r.status = fixed ? CatalogStatus::Erratum : CatalogStatus::Mismatch;
    }
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<IdentityResult> identity_checks(int n_max, std::size_t order, GfEngine& gf, TableCache& oracle,
                                            int random_patterns, unsigned seed) {
  std::vector<IdentityResult> out;

  auto oracle_pair = [&](const PatternSpec& p, const PatternSpec& q, bool x0_only) -> std::optional<int> {
    for (int n = 0; n <= n_max; ++n) {
      const XPoly a = oracle.row(p, n), b = oracle.row(q, n);
      if (x0_only ? a.coeff(0) != b.coeff(0) : a != b) return n;
    }
    return std::nullopt;
  };
  auto record = [&](std::string name, std::optional<std::size_t> series_bad, std::optional<int> oracle_bad) {
    IdentityResult r{std::move(name), !series_bad && !oracle_bad, {}};
    if (series_bad) r.detail += "series differ at t^" + std::to_string(*series_bad) + "; ";
    if (oracle_bad) r.detail += "oracle rows differ at n = " + std::to_string(*oracle_bad);
    out.push_back(std::move(r));
  };

  for (int k = 2; k <= 7; ++k) {
    const PatternSpec p{k, 0, 0, 0}, q{k - 1, 0, 1, 0};
    record("x=0: " + p.to_string() + " vs " + q.to_string(),
           first_difference(gf.qk000(k, order).specialize_x0(), gf.qk0l0(k - 1, 1, order).specialize_x0()),
           oracle_pair(p, q, true));
  }

  for (const auto& [p, q] : {std::pair{PatternSpec{0, 2, 0, 0}, PatternSpec{0, 0, 0, 2}},
                             std::pair{PatternSpec{0, 2, 0, 1}, PatternSpec{0, 1, 0, 2}}}) {
    record(p.to_string() + " vs " + q.to_string(), first_difference(gf.dispatch(p, order), gf.dispatch(q, order)),
           oracle_pair(p, q, false));
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(0, 2);
  for (int i = 0; i < random_patterns; ++i) {
    const PatternSpec p{coord(rng), coord(rng), coord(rng), coord(rng)};
    const PatternSpec q = p.mirrored();
    std::optional<std::size_t> series_bad;
    if (p.nonzero_count() <= 2) series_bad = first_difference(gf.dispatch(p, order), gf.dispatch(q, order));
    record("inverse symmetry " + p.to_string() + " vs " + q.to_string(), series_bad, oracle_pair(p, q, false));
  }
  return out;
}

}  // namespace mmp132
