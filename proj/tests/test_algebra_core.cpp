#include <gtest/gtest.h>

#include <random>

#include "gaugekit/algebra/json.hpp"
#include "gaugekit/algebra/laurent.hpp"
#include "gaugekit/algebra/partition.hpp"
#include "gaugekit/algebra/ratfun.hpp"
#include "gaugekit/algebra/series.hpp"

using namespace gaugekit;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly p("t");
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

// Partition counts from Euler's pentagonal recurrence, plain 64-bit integers.
std::vector<long long> euler_partition_counts(int n) {
  std::vector<long long> p(std::size_t(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sign = (k % 2) ? 1 : -1;
      s += sign * p[std::size_t(m - g1)];
      if (g2 <= m) s += sign * p[std::size_t(m - g2)];
    }
    p[std::size_t(m)] = s;
  }
  return p;
}

LaurentPoly random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-3, 4), len(1, 5), coef(-6, 6);
  LaurentPoly p("t");
  const int low = deg(rng), n = len(rng);
  for (int i = 0; i < n; ++i) p.add_term(low + i, coef(rng));
  if (p.is_zero()) p.add_term(low, 1);
  return p;
}

}  // namespace

TEST(Rational, LowestTermsAndStrings) {
  // Integer pair: the (long, long) overload wraps a negative denominator.
  const Rational q(Integer(6), Integer(-4));
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(parse_rational("10/-4"), Rational(-5, 2));
  EXPECT_EQ(to_json(Rational(7)).get<std::string>(), "7/1");
  EXPECT_THROW(parse_rational("1/0"), error);
}

TEST(Laurent, ExactDivisionExamples) {
  EXPECT_EQ(exact_div(poly({{0, 1}, {8, -1}}), poly({{0, 1}, {4, -1}})), poly({{0, 1}, {4, 1}}));
  const LaurentPoly t("t");
  const auto one_t3 = poly({{0, 1}, {3, 1}}), one_t = poly({{0, 1}, {1, 1}});
  const auto num = one_t3.pow(4) - poly({{4, 1}}) * one_t.pow(4);
  const auto den = poly({{0, 1}, {2, -1}}) * poly({{0, 1}, {4, -1}});
  EXPECT_EQ(laurent_arith(num, den, laurent_op::exact_div), poly({{0, 1}, {2, 1}, {3, 4}, {4, 1}, {6, 1}}));
  try {
    exact_div(poly({{0, 1}, {1, 1}}), poly({{0, 1}, {1, -1}}));
    FAIL() << "expected NonExactDivision";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::non_exact_division);
  }
  EXPECT_THROW(exact_div(one_t, LaurentPoly("t")), error);
}

TEST(Laurent, ProductDividedByFactorRoundTrips) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_laurent(rng), b = random_laurent(rng);
    EXPECT_EQ(exact_div(a * b, b), a);
  }
}

TEST(Laurent, JsonShape) {
  const auto p = poly({{-2, 3}, {1, -1}});
  const json j = to_json(p);
  EXPECT_EQ(j.at("var").get<std::string>(), "t");
  EXPECT_EQ(j.at("terms").at("-2").get<std::string>(), "3/1");
  EXPECT_EQ(j.at("terms").at("1").get<std::string>(), "-1/1");
  EXPECT_EQ(laurent_from_json(j), p);
}

TEST(Series, LogExamples) {
  TruncatedSeries<Rational> s("L", 3);
  s[0] = 1;
  s[1] = 1;
  const auto l = series_log(s);
  EXPECT_EQ(l[0], 0);
  EXPECT_EQ(l[1], 1);
  EXPECT_EQ(l[2], Rational(-1, 2));
  EXPECT_EQ(l[3], Rational(1, 3));

  const auto one = series_log(TruncatedSeries<Rational>::one("L", 6));
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(one[k], 0);

  const Rational c(3, 7);
  TruncatedSeries<Rational> e("L", 2);
  e[0] = 1;
  e[1] = c;
  e[2] = c * c / 2;
  const auto le = series_log(e);
  EXPECT_EQ(le[1], c);
  EXPECT_EQ(le[2], 0);

  TruncatedSeries<Rational> bad("L", 2);
  bad[0] = 2;
  try {
    series_log(bad);
    FAIL();
  } catch (const error& err) {
    EXPECT_EQ(err.code(), errc::bad_constant_term);
  }
}

TEST(Series, LogExpRoundTripOnRandomSeries) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    TruncatedSeries<Rational> s("L", 8);
    s[0] = 1;
    for (int k = 1; k <= 8; ++k) s[k] = Rational(num(rng), den(rng));
    EXPECT_EQ(series_exp(series_log(s)), s);
  }
}

TEST(Series, MultiplicationTruncates) {
  TruncatedSeries<Rational> a("x", 2), b("x", 4);
  a[0] = 1;
  a[1] = 1;
  b[0] = 1;
  b[1] = -1;
  const auto c = a * b;
  EXPECT_EQ(c.order(), 2);
  EXPECT_EQ(c[1], 0);
  EXPECT_EQ(c[2], -1);
}

TEST(RationalFunction, SimplifyExamples) {
  const RationalFunction::Vars v{"tau"};
  const Polynomial tau = Polynomial::variable(0);
  const auto f = ratfun_simplify(v, tau * tau - tau, tau);
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f, RationalFunction(v, tau - 1));
  const auto x = RationalFunction::variable(v, 0);
  EXPECT_TRUE((x.inverse() + (-x).inverse()).is_zero());
}

TEST(RationalFunction, SimplifyIsIdempotentAndKeepsValues) {
  const RationalFunction::Vars v{"x", "y"};
  const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  const Polynomial num = (x * x - y * y) * (x + 3) + y;
  const Polynomial den = (x - y) * (x * y + 2);
  const auto f = ratfun_simplify(v, num, den);
  EXPECT_EQ(ratfun_simplify(f), f);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> n(-20, 20), d(1, 7);
  int checked = 0;
  while (checked < 20) {
    const std::array<Rational, 2> pt{Rational(n(rng), d(rng)), Rational(n(rng), d(rng))};
    const Rational dv = den.evaluate(pt);
    if (dv == 0) continue;
    EXPECT_EQ(f.evaluate(pt), num.evaluate(pt) / dv);
    ++checked;
  }
}

TEST(RationalFunction, GcdCancelsCommonFactor) {
  const RationalFunction::Vars v{"x", "y"};
  const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
  const auto f = ratfun_simplify(v, (x + y) * (x - 2 * y), (x + y) * (x * x + 1));
  EXPECT_EQ(f, ratfun_simplify(v, x - 2 * y, x * x + 1));
  EXPECT_THROW(RationalFunction::from_factors(v, x, {Polynomial()}), error);
}

TEST(Partition, Enumeration) {
  EXPECT_EQ(partitions_of(0).size(), 1u);
  EXPECT_TRUE(partitions_of(0)[0].empty());
  EXPECT_EQ(partitions_of(4).size(), 5u);
  EXPECT_EQ(partitions_of(10).size(), 42u);
  const auto euler = euler_partition_counts(30);
  for (int k = 0; k <= 30; ++k) EXPECT_EQ(partitions_of(k).size(), std::size_t(euler[std::size_t(k)])) << k;
}

TEST(Partition, ArmLegAndConjugate) {
  const Partition p({4, 2, 1});
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(p.arm(0, 0), 3);
  EXPECT_EQ(p.leg(0, 0), 2);
  EXPECT_EQ(p.arm(1, 1), 0);
  EXPECT_EQ(p.leg(0, 1), 1);
  EXPECT_EQ(p.conjugate().parts(), (std::vector<int>{3, 2, 1, 1}));
  // Hook lengths give the dimension of the irreducible S_7 representation: 7!/prod(hooks) = 35.
  long hooks = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.row(i); ++j) hooks *= p.arm(i, j) + p.leg(i, j) + 1;
  EXPECT_EQ(5040 / hooks, 35);
}
