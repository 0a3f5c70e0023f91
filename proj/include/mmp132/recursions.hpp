#pragma once

// Q_n(x) computed from recurrences in n, by splitting S_n(132) on the position of n.
// This route shares no code with the series engine and serves as a third witness.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mmp132/gf.hpp"
#include "mmp132/oracle.hpp"

namespace mmp132 {

class RecursionEngine {
 public:
  /// Rows Q_0..Q_{n_max} for a pattern with at most two nonzero coordinates.
  /// Throws UnsupportedPattern otherwise.
  std::vector<XPoly> rows(const PatternSpec& p, int n_max);

 private:
  const std::vector<XPoly>& rows_locked(Shape s, int k, int l, int n_max);
  std::vector<XPoly> build(Shape s, int k, int l, int n_max);

  std::recursive_mutex mu_;
  std::map<std::tuple<Shape, int, int>, std::vector<XPoly>> memo_;
};

struct RouteValue {
  std::string route;
  XPoly value;
};

struct RecursionReport {
  PatternSpec pattern;
  int n_max = 0;
  bool agree = true;
  /// First n where two of recursion / series / oracle differ.
  std::optional<int> mismatch_n;
  std::optional<RouteValue> route_a;
  std::optional<RouteValue> route_b;
};

/// Recomputes Q_n for n <= n_max from the recurrence and compares it with the series
/// route and the oracle.
RecursionReport recursion_check(const PatternSpec& p, int n_max, GfEngine& gf, TableCache& oracle,
                                RecursionEngine& rec);

}  // namespace mmp132
