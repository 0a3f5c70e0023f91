#include "mmp132/reference.hpp"

#include <algorithm>

#include "mmp132/series.hpp"

namespace mmp132 {

const std::vector<PrintedSeries>& printed_series() {
  static const std::vector<PrintedSeries> s = {
    {{1, 0, 1, 0}, {{1}, {1}, {2}, {4, 1}, {8, 5, 1}, {16, 17, 8, 1}, {32, 49, 38, 12, 1}, {64, 129, 141, 77, 17, 1}, {128, 321, 453, 361, 143, 23, 1}, {256, 769, 1326, 1399, 834, 247, 30, 1}}},
    {{2, 0, 1, 0}, {{1}, {1}, {2}, {5}, {13, 1}, {34, 7, 1}, {89, 32, 10, 1}, {233, 122, 59, 14, 1}, {610, 422, 272, 106, 19, 1}, {1597, 1376, 1090, 591, 182, 25, 1}}},
    {{3, 0, 1, 0}, {{1}, {1}, {2}, {5}, {14}, {41, 1}, {122, 9, 1}, {365, 51, 12, 1}, {1094, 235, 84, 16, 1}, {3281, 966, 454, 139, 21, 1}}},
    {{1, 0, 2, 0}, {{1}, {1}, {2}, {5}, {12, 2}, {29, 11, 2}, {70, 45, 15, 2}, {169, 158, 81, 19, 2}, {408, 509, 359, 129, 23, 2}, {985, 1550, 1409, 700, 189, 27, 2}}},
    {{2, 0, 2, 0}, {{1}, {1}, {2}, {5}, {14}, {40, 2}, {115, 15, 2}, {331, 77, 19, 2}, {953, 331, 121, 23, 2}, {2744, 1288, 624, 177, 27, 2}}},
    {{3, 0, 2, 0}, {{1}, {1}, {2}, {5}, {14}, {42}, {130, 2}, {408, 19, 2}, {1288, 117, 23, 2}, {4076, 588, 169, 27, 2}}},
    {{1, 0, 3, 0}, {{1}, {1}, {2}, {5}, {14}, {37, 5}, {98, 29, 5}, {261, 124, 39, 5}, {694, 475, 207, 49, 5}, {1845, 1680, 963, 310, 59, 5}, {4906, 5635, 4056, 1692, 433, 69, 5}}},
    {{2, 0, 3, 0}, {{1}, {1}, {2}, {5}, {14}, {42}, {127, 5}, {385, 39, 5}, {1169, 207, 49, 5}, {3550, 938, 310, 59, 5}, {10781, 3866, 1642, 433, 69, 5}}},
    {{3, 0, 3, 0}, {{1}, {1}, {2}, {5}, {14}, {42}, {132}, {424, 5}, {1376, 49, 5}, {4488, 310, 59, 5}, {14672, 1617, 433, 69, 5}}},
    {{1, 0, 0, 1}, {{1}, {1}, {2}, {3, 2}, {4, 6, 4}, {5, 12, 15, 10}, {6, 20, 36, 42, 28}, {7, 30, 70, 112, 126, 84}, {8, 42, 120, 240, 360, 396, 264}, {9, 56, 189, 450, 825, 1188, 1287, 858}}},
    {{2, 0, 0, 1}, {{1}, {1}, {2}, {5}, {11, 3}, {23, 13, 6}, {47, 40, 30, 15}, {95, 107, 104, 81, 42}, {191, 266, 308, 301, 238, 126}, {383, 633, 837, 949, 926, 738, 396}}},
    {{3, 0, 0, 1}, {{1}, {1}, {2}, {5}, {14}, {38, 4}, {101, 23, 8}, {266, 92, 51, 20}, {698, 320, 221, 135, 56}, {1829, 1038, 821, 614, 392, 168}}},
    {{1, 0, 0, 2}, {{1}, {1}, {2}, {5}, {9, 5}, {14, 18, 10}, {20, 42, 45, 25}, {27, 80, 126, 126, 70}, {35, 135, 280, 392, 378, 210}, {44, 210, 540, 960, 1260, 1088, 660}}},
    {{2, 0, 0, 2}, {{1}, {1}, {2}, {5}, {14}, {33, 9}, {72, 42, 18}, {151, 135, 98, 45}, {310, 370, 358, 266, 126}, {629, 931, 1093, 1047, 784, 378}}},
    {{3, 0, 0, 2}, {{1}, {1}, {2}, {5}, {14}, {42}, {118, 14}, {319, 82, 28}, {847, 329, 184, 70}, {2231, 1138, 807, 490, 196}}},
    {{0, 1, 1, 0}, {{1}, {1}, {2}, {4, 1}, {8, 5, 1}, {16, 17, 8, 1}, {32, 49, 38, 12, 1}, {64, 129, 141, 77, 17, 1}, {128, 321, 453, 361, 143, 23, 1}, {256, 769, 1326, 1399, 834, 247, 30, 1}}},
    {{0, 1, 2, 0}, {{1}, {1}, {2}, {5}, {12, 2}, {29, 11, 2}, {70, 45, 15, 2}, {169, 158, 81, 19, 2}, {408, 509, 359, 129, 23, 2}, {985, 1550, 1409, 700, 189, 27, 2}}},
    {{0, 1, 3, 0}, {{1}, {1}, {2}, {5}, {14}, {37, 5}, {98, 29, 5}, {261, 124, 39, 5}, {694, 475, 207, 49, 5}, {1845, 1680, 963, 310, 59, 5}}},
    {{0, 1, 4, 0}, {{1}, {1}, {2}, {5}, {14}, {42}, {118, 14}, {331, 84, 14}, {934, 370, 112, 14}, {2645, 1455, 608, 140, 14}}},
    {{0, 2, 1, 0}, {{1}, {1}, {2}, {5}, {12, 2}, {24, 12, 2}, {64, 48, 18, 2}, {144, 160, 97, 26, 2}, {320, 480, 408, 184, 36, 2}, {704, 1344, 1479, 958, 327, 48, 2}}},
    {{0, 2, 2, 0}, {{1}, {1}, {2}, {5}, {14}, {38, 4}, {102, 26, 4}, {271, 120, 34, 4}, {714, 470, 200, 42, 4}, {1868, 1672, 964, 304, 50, 4}}},
    {{0, 2, 3, 0}, {{1}, {1}, {2}, {5}, {14}, {42}, {122, 10}, {351, 68, 10}, {1006, 326, 88, 10}, {2168, 1364, 512, 108, 10}}},
    {{0, 2, 4, 0}, {{1}, {1}, {2}, {5}, {14}, {42}, {132}, {401, 28}, {1206, 196, 28}, {3618, 964, 252, 28}}},
    {{0, 1, 0, 1}, {{1}, {1}, {2}, {4, 1}, {7, 5, 2}, {11, 14, 12, 5}, {16, 30, 39, 33, 14}, {22, 55, 95, 117, 98, 42}, {29, 91, 195, 309, 36, 306, 132}, {37, 140, 357, 684, 1028, 1197, 990, 429}}},
    {{0, 2, 0, 1}, {{1}, {1}, {2}, {5}, {12, 2}, {25, 13, 4}, {46, 45, 31, 10}, {77, 115, 124, 85, 28}, {120, 245, 359, 370, 252, 84}, {177, 462, 854, 1159, 1160, 786, 264}}},
    {{0, 2, 0, 2}, {{1}, {1}, {2}, {5}, {14}, {38, 4}, {91, 33, 8}, {192, 139, 78, 20}, {365, 419, 377, 213, 56}, {639, 1029, 1280, 1116, 630, 168}}},
  };
  return s;
}

const std::vector<PrintedErratum>& printed_errata() {
  static const std::vector<PrintedErratum> e = {
      {{0, 1, 0, 1}, 8, 4, 36, 368},
      {{1, 0, 0, 2}, 9, 5, 1088, 1188},
      {{0, 2, 1, 0}, 5, 0, 24, 28},
      {{0, 2, 3, 0}, 9, 0, 2168, 2868},
  };
  return e;
}

std::string to_string(PrintedStatus s) {
  switch (s) {
    case PrintedStatus::Match: return "match";
    case PrintedStatus::Erratum: return "erratum";
    case PrintedStatus::Mismatch: return "mismatch";
  }
  return "?";
}

namespace {

const PrintedErratum* find_erratum(const PatternSpec& p, int n, std::size_t power) {
  for (const auto& e : printed_errata())
    if (e.pattern == p && e.n == n && e.power == power) return &e;
  return nullptr;
}

}  // namespace

const PrintedSeries* find_printed(const PatternSpec& p) {
  for (const auto& ps : printed_series())
    if (ps.pattern == p) return &ps;
  return nullptr;
}

PrintedCheck check_printed_row(const PrintedSeries& ps, int n, const XPoly& computed) {
  const auto& row = ps.rows.at(static_cast<std::size_t>(n));
  std::vector<BigInt> cs(row.begin(), row.end());
  PrintedCheck c{ps.pattern, n, XPoly(std::move(cs)), computed, PrintedStatus::Match, {}};
  if (c.printed == c.computed) return c;
  const std::size_t width = static_cast<std::size_t>(std::max(c.printed.degree(), c.computed.degree()) + 1);
  bool catalogued = true;
  for (std::size_t r = 0; r < width; ++r) {
    if (c.printed.coeff(r) == c.computed.coeff(r)) continue;
    const PrintedErratum* e = find_erratum(ps.pattern, n, r);
    if (!e || e->printed != c.printed.coeff(r) || e->corrected != c.computed.coeff(r)) catalogued = false;
    c.detail += "x^" + std::to_string(r) + ": printed " + c.printed.coeff(r).str() + ", computed " +
                c.computed.coeff(r).str() + "; ";
  }
  const BigInt cn = catalan(static_cast<std::size_t>(n));
  const bool sums_refute_print = c.printed.sum() != cn && c.computed.sum() == cn;
  c.status = catalogued && sums_refute_print ? PrintedStatus::Erratum : PrintedStatus::Mismatch;
  c.detail += "printed row sums to " + c.printed.sum().str() + ", C_" + std::to_string(n) + " = " + cn.str();
  return c;
}

std::vector<PrintedCheck> verify_printed(GfEngine& gf, TableCache& oracle) {
  std::vector<PrintedCheck> out;
  for (const auto& ps : printed_series()) {
    const std::size_t top = ps.rows.size() - 1;
    const TSeries s = gf.dispatch(ps.pattern, top);
    for (std::size_t n = 0; n <= top; ++n) {
      const int ni = static_cast<int>(n);
      const XPoly o = oracle.row(ps.pattern, ni);
      if (o != s[n]) {
        PrintedCheck c = check_printed_row(ps, ni, s[n]);
        c.status = PrintedStatus::Mismatch;
        c.detail = "series route and oracle disagree";
        out.push_back(std::move(c));
        continue;
      }
      out.push_back(check_printed_row(ps, ni, s[n]));
    }
  }
  return out;
}

}  // namespace mmp132
