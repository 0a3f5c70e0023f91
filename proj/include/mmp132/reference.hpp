#pragma once

// Published expansions of Q(t,x), transcribed term by term, and the known misprints in them.

#include <string>
#include <vector>

#include "mmp132/gf.hpp"
#include "mmp132/oracle.hpp"

namespace mmp132 {

struct PrintedSeries {
  PatternSpec pattern;
  /// rows[n] lists the coefficients of Q_n(x) in ascending powers of x, as printed.
  std::vector<std::vector<long long>> rows;
};

const std::vector<PrintedSeries>& printed_series();

/// A single printed coefficient that is wrong.
struct PrintedErratum {
  PatternSpec pattern;
  int n = 0;
  std::size_t power = 0;
  BigInt printed;
  BigInt corrected;
};

const std::vector<PrintedErratum>& printed_errata();

enum class PrintedStatus { Match, Erratum, Mismatch };
std::string to_string(PrintedStatus s);

struct PrintedCheck {
  PatternSpec pattern;
  int n = 0;
  XPoly printed;
  XPoly computed;
  PrintedStatus status = PrintedStatus::Match;
  std::string detail;
};

/// Printed series for p, or nullptr.
const PrintedSeries* find_printed(const PatternSpec& p);

/// Classifies one computed row against the printed one; `computed` should already be
/// confirmed by a second route.
PrintedCheck check_printed_row(const PrintedSeries& ps, int n, const XPoly& computed);

/// Compares every printed row with the series route and the oracle. A row that differs
/// only in catalogued positions counts as an erratum, and only if the printed row fails
/// the sum-equals-C_n check that the computed row passes.
std::vector<PrintedCheck> verify_printed(GfEngine& gf, TableCache& oracle);

}  // namespace mmp132
