#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "naive.hpp"

#include "mmp132/errors.hpp"
#include "mmp132/json_io.hpp"
#include "mmp132/oracle.hpp"

using namespace mmp132;
namespace fs = std::filesystem;

namespace {

XPoly as_poly(const std::vector<long long>& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return XPoly(std::move(v));
}

fs::path fresh_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("mmp132_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("brute force matches the pointwise definition") {
  const std::vector<naive::Pattern> pats = {{0, 0, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {2, 0, 0, 1},
                                            {0, 2, 1, 0}, {4, 2, -1, -1}, {-1, 1, -1, 0}, {1, 1, 1, 1}};
  for (const auto& np : pats) {
    PatternSpec p;
    for (int c = 0; c < 4; ++c) p.coords[c] = np[c] < 0 ? Coord::none() : Coord::at_least(np[c]);
    for (int n = 0; n <= 8; ++n) CHECK(brute_force_Q(n, p) == as_poly(naive::Q(n, np)));
  }
}

TEST_CASE("threaded enumeration agrees with the serial one") {
  // n = 10 takes the concurrent path; compare with a plain accumulation
  const PatternSpec p(1, 0, 1, 0);
  std::vector<BigInt> c(11);
  for_each_avoider(10, [&](const Permutation& s) { c[mmp_count(s, p)] += 1; });
  CHECK(brute_force_Q(10, p) == XPoly(c));
}

TEST_CASE("row sums and cap") {
  for (int n = 0; n <= 9; ++n) CHECK(brute_force_Q(n, PatternSpec(2, 0, 1, 0)).sum() == catalan(n));
  CHECK(brute_force_Q(5, PatternSpec(0, 0, 0, 0)) == XPoly::monomial(42, 5));
  CHECK(brute_force_coeff(5, PatternSpec(1, 0, 1, 0), 1) == 17);
  CHECK_THROWS_AS(brute_force_Q(9, PatternSpec(0, 0, 0, 0), 8), CapExceeded);
  const DistTable t = build_table(PatternSpec(1, 0, 1, 0), 5);
  CHECK(t.rows.size() == 6);
  CHECK(t.rows.at(5) == XPoly{16, 17, 8, 1});
}

TEST_CASE("json forms round-trip byte for byte") {
  const DistTable t = build_table(PatternSpec::parse("1,0,e,0"), 6);
  const std::string s = canonical(to_json(t));
  CHECK(canonical(json::parse(s)) == s);
  CHECK(table_from_json(json::parse(s)) == t);
  CHECK(s.find("\"pattern\": \"1,0,e,0\"") != std::string::npos);

  TSeries ser(3);
  ser.set(3, XPoly{4, 1});
  ser.set(1, XPoly(BigInt("123456789012345678901234567890")));
  const std::string ss = canonical(to_json(ser));
  CHECK(series_from_json(json::parse(ss)) == ser);
  CHECK(canonical(json::parse(ss)) == ss);

  const RationalGF r(IntPoly{1, -6, 10, -4}, IntPoly{1, -7, 15, -10, 1});
  CHECK(rational_from_json(to_json(r)) == r);
  CHECK(to_json(XPoly{4, 1}).dump() == R"(["4","1"])");

  CHECK_THROWS_AS(xpoly_from_json(json::parse(R"(["1", 2])")), InvalidInput);
  CHECK_THROWS_AS(xpoly_from_json(json::parse(R"(["1x"])")), InvalidInput);
  CHECK_THROWS_AS(table_from_json(json::parse(R"({"rows":{}})")), InvalidInput);
}

TEST_CASE("disk cache is reused and stable") {
  const auto dir = fresh_dir("oracle");
  const PatternSpec p(0, 1, 0, 1);
  std::string first;
  {
    TableCache c(dir);
    c.table(p, 7);
    std::ifstream in(c.file_for(p));
    first.assign(std::istreambuf_iterator<char>(in), {});
    CHECK(c.file_for(p).filename() == "mmp_0_1_0_1.json");
  }
  CHECK_FALSE(first.empty());

  // Rewriting the cached row proves the second cache reads the file instead of recomputing.
  json j = json::parse(first);
  j["rows"]["7"] = json::array({"999"});
  write_file_atomic(dir / "mmp_0_1_0_1.json", canonical(j));
  TableCache again(dir);
  CHECK(again.row(p, 7) == XPoly{999});
  CHECK(again.row(p, 6) == brute_force_Q(6, p));

  // A damaged file is ignored.
  { std::ofstream(dir / "mmp_1_0_1_0.json") << "{not json"; }
  TableCache damaged(dir);
  CHECK(damaged.row(PatternSpec(1, 0, 1, 0), 5) == XPoly{16, 17, 8, 1});
  fs::remove_all(dir);
}

TEST_CASE("cache is safe to share between threads") {
  const auto dir = fresh_dir("threads");
  TableCache c(dir);
  std::vector<std::future<XPoly>> jobs;
  for (int i = 0; i < 16; ++i)
    jobs.push_back(std::async(std::launch::async, [&c, i] { return c.row(PatternSpec(i % 3, 0, 1, 0), 7 + i % 2); }));
  for (int i = 0; i < 16; ++i) CHECK(jobs[i].get() == brute_force_Q(7 + i % 2, PatternSpec(i % 3, 0, 1, 0)));
  fs::remove_all(dir);
}
