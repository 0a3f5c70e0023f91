#include <random>

#include "doctest.h"
#include "naive.hpp"

#include "mmp132/errors.hpp"
#include "mmp132/permutation.hpp"
#include "mmp132/series.hpp"

using namespace mmp132;

TEST_CASE("quadrant counts of the worked example") {
  const auto s = Permutation::parse("471569283");
  const QuadrantCounts q = quadrant_counts(s, 4);
  CHECK(q == QuadrantCounts{3, 1, 2, 2});
  CHECK(q.total() == 8);
  CHECK(matches(s, 4, PatternSpec(2, 1, 2, 1)));
  CHECK_FALSE(matches(s, 4, PatternSpec(4, 0, 0, 0)));
  CHECK_THROWS_AS(quadrant_counts(s, 0), InvalidInput);
  CHECK_THROWS_AS(quadrant_counts(s, 10), InvalidInput);
}

TEST_CASE("parsing") {
  CHECK(Permutation::parse("").empty());
  CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").at(1) == 10);
  CHECK_THROWS_AS(Permutation::parse("112"), InvalidInput);
  CHECK_THROWS_AS(Permutation::parse("13"), InvalidInput);
  CHECK_THROWS_AS(Permutation::parse("1a"), InvalidInput);

  const auto p = PatternSpec::parse("4,2,e,e");
  CHECK(p.c().is_empty());
  CHECK(p.a().min() == 4);
  CHECK(p.to_string() == "4,2,e,e");
  CHECK(p.has_empty());
  CHECK(PatternSpec::parse("0,1,0,1").nonzero_count() == 2);
  CHECK_THROWS_AS(PatternSpec::parse("1,2,3"), InvalidInput);
  CHECK_THROWS_AS(PatternSpec::parse("1,-2,3,4"), InvalidInput);
  CHECK_THROWS_AS(PatternSpec::parse("1,x,3,4"), InvalidInput);
}

TEST_CASE("reduce keeps relative order") {
  const std::vector<int> a{2, 7, 5, 4};
  CHECK(reduce(a).to_string() == "1432");
  const std::vector<int> b{9, 1, 7};
  CHECK(reduce(b).to_string() == "312");
  const std::vector<int> dup{3, 3};
  CHECK_THROWS_AS(reduce(dup), InvalidInput);
}

TEST_CASE("small counts") {
  CHECK(mmp_count(Permutation::parse("123"), PatternSpec(0, 0, 1, 0)) == 2);
  // Every point of 12 has a neighbour in some quadrant, so no point sees four empty quadrants.
  CHECK(mmp_count(Permutation::parse("12"), PatternSpec::parse("e,e,e,e")) == 0);
  CHECK(mmp_count(Permutation::parse("1"), PatternSpec::parse("e,e,e,e")) == 1);
  CHECK(mmp_count(Permutation::parse("471569283"), PatternSpec(0, 0, 0, 0)) == 9);
}

TEST_CASE("avoider enumeration against filtering all of S_n") {
  for (int n = 0; n <= 8; ++n) {
    const auto lib = enumerate_avoiders(n);
    const auto ref = naive::avoiders(n);
    REQUIRE(lib.size() == ref.size());
    CHECK(BigInt(lib.size()) == catalan(static_cast<std::size_t>(n)));
    std::vector<std::vector<int>> got;
    for (const auto& s : lib) got.emplace_back(s.values().begin(), s.values().end());
    std::sort(got.begin(), got.end());
    CHECK(got == ref);
  }
  CHECK_THROWS_AS(enumerate_avoiders(6, 5), CapExceeded);
}

TEST_CASE("slices by position of n partition S_n(132)") {
  const int n = 7;
  std::size_t total = 0;
  for (int pos = 1; pos <= n; ++pos)
    for_each_avoider_with_max_at(n, pos, [&](const Permutation& s) {
      CHECK(s.at(pos) == n);
      ++total;
    });
  CHECK(BigInt(total) == catalan(n));
}

TEST_CASE("mmp_count agrees with the pointwise definition") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    naive::Pattern np{coord(rng), coord(rng), coord(rng), coord(rng)};
    PatternSpec p;
    for (int c = 0; c < 4; ++c) p.coords[c] = np[c] < 0 ? Coord::none() : Coord::at_least(np[c]);
    for (const auto& s : enumerate_avoiders(6)) {
      const std::vector<int> v(s.values().begin(), s.values().end());
      REQUIRE(mmp_count(s, p) == naive::count(v, np));
    }
  }
}

TEST_CASE("inversion swaps the second and fourth quadrants") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const PatternSpec p(coord(rng), coord(rng), coord(rng), coord(rng));
    for (const auto& s : enumerate_avoiders(7)) {
      const Permutation inv = inverse(s);
      REQUIRE(is_132_avoiding(inv));
      REQUIRE(mmp_count(s, p) == mmp_count(inv, p.mirrored()));
    }
  }
  CHECK(inverse(Permutation::parse("231")).to_string() == "312");
}
