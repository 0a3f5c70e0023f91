#include "doctest.h"

#include "mmp132/errors.hpp"
#include "mmp132/series.hpp"

using namespace mmp132;

namespace {
XPoly xp(std::initializer_list<long long> c) { return XPoly(c); }
}  // namespace

TEST_CASE("integer polynomials") {
  const IntPoly a{1, 2};
  const IntPoly b{-1, 0, 3};
  CHECK(a * b == IntPoly{-1, -2, 3, 6});
  CHECK(a + b == IntPoly{0, 2, 3});
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(b.eval(BigInt(2)) == 11);
  CHECK(b.sum() == 2);
  CHECK(IntPoly{0, 0, 5}.divided_by_variable() == IntPoly{0, 5});
  CHECK_THROWS_AS(a.divided_by_variable(), SeriesError);
  CHECK(IntPoly{4, 6}.divided_exact(2) == IntPoly{2, 3});
  const IntPoly odd{4, 5};
  CHECK_THROWS_AS(odd.divided_exact(2), SeriesError);
  CHECK(IntPoly{4, 1, 0, 2}.to_string() == "4 + x + 2x^3");
  CHECK(IntPoly{0, -1}.to_string() == "-x");
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(9) == 4862);
  CHECK(catalan(20) == BigInt("6564120420"));
  CHECK(catalan_prefix(4) == IntPoly{1, 1, 2, 5});
  // C = 1 + t C^2
  const TSeries c = catalan_series(15);
  CHECK(c == TSeries::one(15) + (c * c).shifted(1));
  const TSeries ctx = catalan_of_tx(5);
  CHECK(ctx[3] == XPoly::monomial(5, 3));
}

TEST_CASE("orders and coefficient access") {
  const TSeries a = TSeries::one(5);
  const TSeries b = catalan_series(3);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK_THROWS_AS(b[4], SeriesError);
  CHECK_THROWS_AS(b.truncated(4), SeriesError);
  CHECK(catalan_series(8).truncated(3) == b);
  CHECK(catalan_series(8).agrees_with(b));
  TSeries s(5);
  s.set(1, XPoly(BigInt(1)));
  s.set(2, XPoly(BigInt(2)));
  s.set(3, xp({4, 1}));
  CHECK(s.to_string() == "t + 2t^2 + (4 + x)t^3 + O(t^6)");
  CHECK(TSeries(2).to_string() == "O(t^3)");
}

TEST_CASE("reciprocal and square root") {
  const TSeries one_minus_t = TSeries::from_t_poly(10, IntPoly{1, -1});
  const TSeries inv = reciprocal(one_minus_t);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(inv[n] == XPoly(BigInt(1)));
  CHECK(inv * one_minus_t == TSeries::one(10));
  CHECK_THROWS_AS(reciprocal(TSeries::from_t_poly(4, IntPoly{2, 1})), SeriesError);

  // a series with x in it
  TSeries a = TSeries::one(8) - TSeries::monomial(8, 1, xp({0, 1}));
  CHECK(reciprocal(a) * a == TSeries::one(8));

  const TSeries sq = catalan_of_tx(9) * catalan_of_tx(9);
  const TSeries r = sqrt_unit(sq);
  CHECK(r == catalan_of_tx(9));
  CHECK_THROWS_AS(sqrt_unit(TSeries::from_t_poly(4, IntPoly{1, 1})), SeriesError);
}

TEST_CASE("quadratic fixed point recovers C(tx)") {
  // u Q^2 - Q + 1 = 0 with u = tx
  const std::size_t N = 12;
  const TSeries q = solve_quadratic_fixed_point(TSeries::one(N), TSeries::monomial(N, 1, xp({0, 1})));
  CHECK(q == catalan_of_tx(N));
  CHECK_THROWS_AS(solve_quadratic_fixed_point(TSeries::from_t_poly(3, IntPoly{2}), TSeries(3)), SeriesError);
}

TEST_CASE("rational expansion") {
  // Pell-type: (1 - t - t^2)/(1 - 2t - t^2)
  const TSeries s = expand_rational(RationalGF(IntPoly{1, -1, -1}, IntPoly{1, -2, -1}), 8);
  const std::vector<long long> want{1, 1, 2, 5, 12, 29, 70, 169, 408};
  for (std::size_t n = 0; n <= 8; ++n) CHECK(s.coeff(n, 0) == want[n]);
  CHECK_THROWS_AS(RationalGF(IntPoly{1}, IntPoly{2, 1}), SeriesError);
}

TEST_CASE("exact monomial division") {
  const TSeries s = TSeries::monomial(6, 2, xp({0, 6}));
  const TSeries d = divide_exact_monomial(s, 2, 1, 3);
  CHECK(d.order() == 4);
  CHECK(d[0] == XPoly(BigInt(2)));
  CHECK_THROWS_AS(divide_exact_monomial(TSeries::one(4), 1, 0, 1), SeriesError);
}
