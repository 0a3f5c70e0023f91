#include "doctest.h"

#include "mmp132/errors.hpp"
#include "mmp132/json_io.hpp"
#include "mmp132/recursions.hpp"

using namespace mmp132;

TEST_CASE("recursion, series and oracle agree") {
  GfEngine gf;
  TableCache oracle;
  RecursionEngine rec;
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l)
      for (PatternSpec p : {PatternSpec(k, 0, l, 0), PatternSpec(k, 0, 0, l), PatternSpec(k, l, 0, 0),
                            PatternSpec(0, k, l, 0), PatternSpec(0, 0, l, k), PatternSpec(0, k, 0, l)}) {
        CAPTURE(p.to_string());
        const RecursionReport r = recursion_check(p, 9, gf, oracle, rec);
        CHECK(r.agree);
        CHECK_FALSE(r.mismatch_n.has_value());
      }
}

TEST_CASE("recursion rows") {
  RecursionEngine rec;
  const auto rows = rec.rows(PatternSpec(1, 0, 1, 0), 5);
  REQUIRE(rows.size() == 6);
  CHECK(rows[5] == XPoly{16, 17, 8, 1});
  CHECK_THROWS_AS(rec.rows(PatternSpec(1, 1, 1, 0), 4), UnsupportedPattern);
}

TEST_CASE("a planted disagreement is reported") {
  // The oracle reads a doctored cache file, so the check must name n = 4.
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "mmp132_test_planted";
  fs::remove_all(dir);
  TableCache seed(dir);
  seed.table(PatternSpec(1, 0, 1, 0), 6);
  auto j = to_json(seed.table(PatternSpec(1, 0, 1, 0), 6));
  j["rows"]["4"] = json::array({"8", "5", "2"});
  write_file_atomic(seed.file_for(PatternSpec(1, 0, 1, 0)), canonical(j));

  GfEngine gf;
  TableCache doctored(dir);
  RecursionEngine rec;
  const RecursionReport r = recursion_check(PatternSpec(1, 0, 1, 0), 6, gf, doctored, rec);
  CHECK_FALSE(r.agree);
  REQUIRE(r.mismatch_n.has_value());
  CHECK(*r.mismatch_n == 4);
  REQUIRE(r.route_b.has_value());
  CHECK(r.route_b->value == XPoly{8, 5, 2});
  fs::remove_all(dir);
}
