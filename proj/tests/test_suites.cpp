#include "doctest.h"

#include "mmp132/errors.hpp"
#include "mmp132/suites.hpp"

using namespace mmp132;

TEST_CASE("suite reports are deterministic and canonical") {
  GfEngine gf;
  TableCache oracle;
  RecursionEngine rec;
  OeisOptions o;
  o.offline = true;
  const OeisClient oeis(o);
  SuiteContext ctx{gf, oracle, rec, oeis, 7, 2, 20};
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const SuiteResult a = run_suite(name, ctx);
    CHECK(a.pass);
    const std::string s = canonical(a.report);
    CHECK(canonical(json::parse(s)) == s);
    CHECK(canonical(run_suite(name, ctx).report) == s);
  }
  CHECK_THROWS_AS(run_suite("nope", ctx), InvalidInput);
}

TEST_CASE("oracle-gf report layout") {
  GfEngine gf;
  TableCache oracle;
  RecursionEngine rec;
  const OeisClient oeis;
  SuiteContext ctx{gf, oracle, rec, oeis, 6, 1, 10};
  const SuiteResult r = suite_oracle_gf(ctx);
  REQUIRE(r.report.is_array());
  CHECK(r.report.size() == supported_patterns(1).size());
  const json& first = r.report.at(0);
  CHECK(first.at("pattern") == "0,0,0,0");
  CHECK(first.at("n_max") == 6);
  CHECK(first.at("agree") == true);
  CHECK(first.at("first_mismatch").is_null());
}

TEST_CASE("supported pattern list") {
  const auto ps = supported_patterns(3);
  CHECK(std::is_sorted(ps.begin(), ps.end()));
  // base shapes, then k,l in 1..3 for six two-parameter shapes (0,k,0,l) counted once
  CHECK(ps.size() == 1 + 4 * 3 + 6 * 9);
}
