#include <future>

#include "doctest.h"
#include "naive.hpp"

#include "mmp132/errors.hpp"
#include "mmp132/gf.hpp"
#include "mmp132/oracle.hpp"

using namespace mmp132;

namespace {

XPoly naive_row(int n, const PatternSpec& p) {
  naive::Pattern np;
  for (int c = 0; c < 4; ++c) np[c] = p.coords[c].min();
  const auto v = naive::Q(n, np);
  return XPoly(std::vector<BigInt>(v.begin(), v.end()));
}

std::vector<PatternSpec> two_param_patterns(int m) {
  std::vector<PatternSpec> out{{0, 0, 0, 0}};
  for (int k = 1; k <= m; ++k) {
    for (PatternSpec p : {PatternSpec(k, 0, 0, 0), PatternSpec(0, k, 0, 0), PatternSpec(0, 0, k, 0), PatternSpec(0, 0, 0, k)})
      out.push_back(p);
    for (int l = 1; l <= m; ++l)
      for (PatternSpec p : {PatternSpec(k, 0, l, 0), PatternSpec(k, 0, 0, l), PatternSpec(k, l, 0, 0),
                            PatternSpec(0, k, l, 0), PatternSpec(0, 0, l, k), PatternSpec(0, k, 0, l)})
        out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("classification and normalization") {
  CHECK(classify(PatternSpec(0, 0, 0, 0)).shape == Shape::Zero);
  CHECK(classify(PatternSpec(2, 0, 3, 0)).shape == Shape::K0L0);
  const GfKey kl = classify(PatternSpec(2, 3, 0, 0), 5);
  CHECK(kl.shape == Shape::KL00);
  const GfKey n = normalize(kl);
  CHECK(n.shape == Shape::K00L);
  CHECK(pattern_of(n) == PatternSpec(2, 0, 0, 3));
  CHECK(pattern_of(normalize(classify(PatternSpec(0, 0, 1, 2)))) == PatternSpec(0, 2, 1, 0));
  CHECK(pattern_of(normalize(classify(PatternSpec(0, 0, 0, 2)))) == PatternSpec(0, 2, 0, 0));
  CHECK(normalize(classify(PatternSpec(0, 1, 0, 2))).shape == Shape::ZK0L);
  CHECK_THROWS_AS(classify(PatternSpec(1, 1, 1, 0)), UnsupportedPattern);
  CHECK_THROWS_AS(classify(PatternSpec::parse("1,0,e,0")), UnsupportedPattern);
}

TEST_CASE("base series") {
  GfEngine e;
  CHECK(e.q0000(10) == catalan_of_tx(10));
  const TSeries s = e.dispatch(PatternSpec(1, 0, 1, 0), 9);
  CHECK(s[9] == XPoly{256, 769, 1326, 1399, 834, 247, 30, 1});
  CHECK(s[5] == XPoly{16, 17, 8, 1});
}

TEST_CASE("series route equals the pointwise definition") {
  GfEngine e;
  for (const auto& p : two_param_patterns(2)) {
    CAPTURE(p.to_string());
    const TSeries s = e.dispatch(p, 8);
    for (int n = 0; n <= 8; ++n) REQUIRE(s[n] == naive_row(n, p));
  }
}

TEST_CASE("series route equals the oracle for parameters up to 3") {
  GfEngine e;
  TableCache c;
  for (const auto& p : two_param_patterns(3)) {
    CAPTURE(p.to_string());
    const TSeries s = e.dispatch(p, 9);
    for (int n = 0; n <= 9; ++n) REQUIRE(s[n] == c.row(p, n));
  }
}

TEST_CASE("every row sums to C_n") {
  GfEngine e;
  for (const auto& p : two_param_patterns(3)) {
    const TSeries s = e.dispatch(p, 20);
    for (std::size_t n = 0; n <= 20; ++n) REQUIRE(s[n].sum() == catalan(n));
  }
}

TEST_CASE("mirror patterns share a series") {
  GfEngine e;
  for (const auto& p : two_param_patterns(3)) CHECK(e.dispatch(p, 14) == e.dispatch(p.mirrored(), 14));
}

TEST_CASE("alternative derivations agree") {
  GfEngine e;
  const std::size_t N = 20;
  for (int k = 1; k <= 4; ++k) {
    CHECK(e.qk001_reduced(k, N) == e.qk00l(k, 1, N));
    CHECK(e.qk002_reduced(k, N) == e.qk00l(k, 2, N));
    CHECK(e.q00k0_radical(k, N) == e.q00k0(k, N));
    CHECK(e.q02l0_reduced(k, N) == e.q0kl0(2, k, N));
  }
  CHECK(e.q0101_reduced(N) == e.q0k0l(1, 1, N));
  CHECK(e.q0201_reduced(N) == e.q0k0l(2, 1, N));
  CHECK(e.q0202_reduced(N) == e.q0k0l(2, 2, N));
}

TEST_CASE("memo serves lower orders and concurrent callers") {
  GfEngine e;
  const TSeries big = e.dispatch(PatternSpec(2, 0, 2, 0), 18);
  CHECK(e.dispatch(PatternSpec(2, 0, 2, 0), 7) == big.truncated(7));
  CHECK(e.memo_size() > 0);
  e.clear();
  CHECK(e.memo_size() == 0);

  std::vector<std::future<TSeries>> jobs;
  for (int i = 0; i < 8; ++i)
    jobs.push_back(std::async(std::launch::async, [&e, i] { return e.dispatch(PatternSpec(0, 1 + i % 3, 0, 2), 15); }));
  for (int i = 0; i < 8; ++i) CHECK(jobs[i].get() == GfEngine().dispatch(PatternSpec(0, 1 + i % 3, 0, 2), 15));
}

TEST_CASE("x = 0 constant terms") {
  GfEngine e;
  const auto seq = e.dispatch(PatternSpec(2, 0, 2, 0), 9).x0_sequence();
  const std::vector<long long> want{1, 1, 2, 5, 14, 40, 115, 331, 953, 2744};
  for (std::size_t n = 0; n < want.size(); ++n) CHECK(seq[n] == want[n]);
}
