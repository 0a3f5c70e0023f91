#include "doctest.h"
#include "naive.hpp"

#include "mmp132/closed_forms.hpp"
#include "mmp132/errors.hpp"

using namespace mmp132;

namespace {

BigInt naive_coeff(int n, naive::Pattern p, std::size_t r) {
  const auto c = naive::Q(n, p);
  return r < c.size() ? BigInt(c[r]) : BigInt(0);
}

}  // namespace

TEST_CASE("fixed-power formulas on hand-checked values") {
  CHECK(special_count(PatternSpec(1, 0, 1, 0), 5, 0) == 16);
  CHECK(special_count(PatternSpec(1, 0, 1, 0), 5, 1) == 17);
  CHECK(special_count(PatternSpec(1, 0, 1, 0), 9, 1) == 769);
  CHECK(special_count(PatternSpec(1, 0, 0, 1), 7, 0) == 7);
  CHECK(special_count(PatternSpec(1, 0, 0, 1), 7, 1) == 30);
  CHECK(special_count(PatternSpec(0, 1, 0, 1), 6, 0) == 16);
  CHECK_THROWS_AS(special_count(PatternSpec(3, 3, 0, 0), 6, 0), NotCovered);
}

TEST_CASE("formulas agree with the pointwise definition for small n") {
  for (int n = 4; n <= 8; ++n) {
    CHECK(special_count(PatternSpec(1, 0, 1, 0), n, 0) == naive_coeff(n, {1, 0, 1, 0}, 0));
    CHECK(special_count(PatternSpec(1, 0, 1, 0), n, 1) == naive_coeff(n, {1, 0, 1, 0}, 1));
    CHECK(special_count(PatternSpec(0, 1, 0, 1), n, 0) == naive_coeff(n, {0, 1, 0, 1}, 0));

    const CoeffPrediction top = highest_coeff(PatternSpec(0, 1, 0, 1), n);
    CHECK(top.value == naive_coeff(n, {0, 1, 0, 1}, static_cast<std::size_t>(top.exponent)));
    const CoeffPrediction second = second_coeff(PatternSpec(1, 0, 1, 0), n);
    CHECK(second.value == naive_coeff(n, {1, 0, 1, 0}, static_cast<std::size_t>(second.exponent)));
  }
}

TEST_CASE("mirror images use the same formula") {
  const CoeffPrediction a = highest_coeff(PatternSpec(0, 2, 1, 0), 8);
  const CoeffPrediction b = highest_coeff(PatternSpec(0, 0, 1, 2), 8);
  CHECK(a.exponent == b.exponent);
  CHECK(a.value == b.value);
}

TEST_CASE("thresholds") {
  CHECK_THROWS_AS(evaluate(formula("q1010_x1"), PatternSpec(1, 0, 1, 0), 2), BelowThreshold);
  CHECK_THROWS_AS(evaluate(formula("k001_top"), PatternSpec(3, 0, 0, 1), 4), BelowThreshold);
  CHECK_NOTHROW(evaluate(formula("k001_top"), PatternSpec(3, 0, 0, 1), 5));
  CHECK_THROWS_AS(formula("no_such_formula"), NotCovered);
  CHECK_THROWS_AS(evaluate(formula("q1010_x0"), PatternSpec(0, 1, 0, 1), 5), NotCovered);
}

TEST_CASE("registry holds against the oracle") {
  TableCache oracle;
  const auto rows = verify_formulas(9, oracle);
  std::size_t matched = 0;
  for (const auto& r : rows) {
    CAPTURE(r.formula_id);
    CAPTURE(r.pattern.to_string());
    CAPTURE(r.n);
    CHECK(r.status != CheckStatus::Mismatch);
    if (r.status == CheckStatus::Match) {
      ++matched;
      REQUIRE(r.predicted.has_value());
      REQUIRE(r.observed.has_value());
      CHECK(r.predicted->value == *r.observed);
    }
  }
  CHECK(matched > 200);
  CHECK(std::is_sorted(rows.begin(), rows.end(), [](const FormulaCheck& a, const FormulaCheck& b) {
    return std::tie(a.formula_id, a.pattern, a.n) < std::tie(b.formula_id, b.pattern, b.n);
  }));
}

TEST_CASE("conjectural entries are not used for lookups") {
  const CoeffFormula& f = formula("k002_top_general");
  CHECK(f.conjecture);
}

TEST_CASE("catalog: two errata, the rest match") {
  GfEngine gf;
  std::vector<PatternSpec> errata;
  for (const auto& r : verify_catalog(20, gf)) {
    CAPTURE(r.entry.pattern.to_string());
    CHECK(r.status != CatalogStatus::Mismatch);
    if (r.status == CatalogStatus::Erratum) {
      errata.push_back(r.entry.pattern);
      REQUIRE(r.first_difference.has_value());
      CHECK(*r.first_difference == 2);
    }
  }
  std::sort(errata.begin(), errata.end());
  CHECK(errata == std::vector<PatternSpec>{PatternSpec(6, 0, 1, 0), PatternSpec(7, 0, 0, 0)});
}

TEST_CASE("Pell entry expands to Pell numbers") {
  for (const auto& e : gf_catalog()) {
    if (e.pattern != PatternSpec(1, 0, 2, 0)) continue;
    const auto s = expand_rational(e.printed, 12).x0_sequence();
    for (std::size_t n = 3; n <= 12; ++n) CHECK(s[n] == 2 * s[n - 1] + s[n - 2]);
    CHECK(e.oeis_id == std::optional<std::string>("A000129"));
  }
}

TEST_CASE("identities") {
  GfEngine gf;
  TableCache oracle;
  for (const auto& r : identity_checks(8, 20, gf, oracle)) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.holds);
  }
}
