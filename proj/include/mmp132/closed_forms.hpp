#pragma once

// Explicit coefficient formulas, the x = 0 rational generating functions and the
// identities tying patterns together.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmp132/gf.hpp"
#include "mmp132/oracle.hpp"
#include "mmp132/series.hpp"

namespace mmp132 {

struct CoeffPrediction {
  long long exponent = 0;
  BigInt value;

  friend bool operator==(const CoeffPrediction&, const CoeffPrediction&) = default;
};

enum class FormulaKind {
  Highest,  // top coefficient; also asserts the polynomial degree
  Second,   // coefficient just below the top
  Fixed,    // coefficient of a fixed power of x
};

struct CoeffFormula {
  std::string id;
  FormulaKind kind = FormulaKind::Fixed;
  std::string statement;
  /// Observed pattern with no published proof; verified like the others, reported apart.
  bool conjecture = false;
  std::function<bool(const PatternSpec&)> covers;
  /// Smallest n the formula is claimed for.
  std::function<int(const PatternSpec&)> threshold;
  /// Threshold as printed alongside the statement, when it differs from `threshold`.
  std::function<int(const PatternSpec&)> printed_threshold;
  std::function<long long(const PatternSpec&, int)> exponent;
  std::function<BigInt(const PatternSpec&, int)> value;
  /// Instances the verification suite checks.
  std::vector<PatternSpec> samples;
};

const std::vector<CoeffFormula>& formula_registry();

/// Throws NotCovered for an unknown id.
const CoeffFormula& formula(std::string_view id);

/// Throws NotCovered when f does not apply to p and BelowThreshold when n is too small.
CoeffPrediction evaluate(const CoeffFormula& f, const PatternSpec& p, int n);

/// Top exponent and coefficient of Q_n for p (or its mirror image). Conjectural entries
/// are skipped. Throws NotCovered or BelowThreshold.
CoeffPrediction highest_coeff(const PatternSpec& p, int n);
CoeffPrediction second_coeff(const PatternSpec& p, int n);
/// Coefficient of x^r from a fixed-power formula.
BigInt special_count(const PatternSpec& p, int n, std::size_t r);

enum class CheckStatus { Match, Mismatch, BelowThreshold };
std::string to_string(CheckStatus s);

struct FormulaCheck {
  std::string formula_id;
  PatternSpec pattern;
  int n = 0;
  std::optional<CoeffPrediction> predicted;
  std::optional<BigInt> observed;
  CheckStatus status = CheckStatus::Match;
  std::string detail;
};

/// Every registered formula on every sample for n = 1..n_max against the oracle.
/// Rows are sorted by formula id, pattern, then n.
std::vector<FormulaCheck> verify_formulas(int n_max, TableCache& oracle);

struct GfCatalogEntry {
  PatternSpec pattern;
  RationalGF printed;
  /// Replacement when the printed fraction is a misprint.
  std::optional<RationalGF> corrected;
  std::optional<std::string> oeis_id;
  std::string note;
};

const std::vector<GfCatalogEntry>& gf_catalog();

enum class CatalogStatus { Match, Erratum, Mismatch };
std::string to_string(CatalogStatus s);

struct CatalogResult {
  GfCatalogEntry entry;
  CatalogStatus status = CatalogStatus::Match;
  /// First power of t where the printed fraction disagrees with the series route.
  std::optional<std::size_t> first_difference;
};

/// Expands each catalog fraction to order N and compares with the series route at x = 0.
/// An entry is an erratum when the printed fraction fails and the correction matches.
std::vector<CatalogResult> verify_catalog(std::size_t N, GfEngine& gf);

struct IdentityResult {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Relations between patterns checked on both the series and the oracle route:
/// avoidance equivalence at x = 0, the (0,2,0,0)/(0,0,0,2) and (0,2,0,1)/(0,1,0,2) pairs,
/// and the inverse symmetry on `random_patterns` random patterns drawn with `seed`.
std::vector<IdentityResult> identity_checks(int n_max, std::size_t order, GfEngine& gf, TableCache& oracle,
                                            int random_patterns = 20, unsigned seed = 132);

}  // namespace mmp132
