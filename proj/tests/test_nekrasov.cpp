#include <gtest/gtest.h>

#include <fstream>

#include "gaugekit/nekrasov.hpp"

using namespace gaugekit;

namespace {

json load_golden() {
  std::ifstream in(std::string(GAUGEKIT_SOURCE_DIR) + "/tests/golden/nekrasov_rank2.json");
  return json::parse(in);
}

RationalFunction e1e2_power(int k, const Rational& c) {
  std::vector<Polynomial> den;
  for (int i = 0; i < k; ++i) {
    den.push_back(Polynomial::variable(0));
    den.push_back(Polynomial::variable(1));
  }
  return RationalFunction::from_factors(nekrasov_vars(), Polynomial(c), den);
}

Rational factorial_inverse(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r /= i;
  return r;
}

}  // namespace

TEST(FixedPoints, Counts) {
  const auto r1 = fixed_points(1, 2);
  ASSERT_EQ(r1.size(), 2u);
  EXPECT_EQ(r1[0].partitions[0].parts(), (std::vector<int>{2}));
  EXPECT_EQ(r1[1].partitions[0].parts(), (std::vector<int>{1, 1}));
  const auto r2 = fixed_points(2, 1);
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_EQ(r2[0].to_string(), "[(1),()]");
  EXPECT_EQ(fixed_points(2, 3).size(), 10u);
  for (int k = 0; k <= 6; ++k) {
    std::size_t want = 0;
    for (int j = 0; j <= k; ++j) want += partitions_of(j).size() * partitions_of(k - j).size();
    EXPECT_EQ(fixed_points(2, k).size(), want);
  }
}

TEST(TangentWeights, SingleBox) {
  const auto w = tangent_weights(fixed_points(1, 1)[0]);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], (LinearWeight{0, 1, 0}));
  EXPECT_EQ(w[1], (LinearWeight{1, 0, 0}));
}

TEST(TangentWeights, RankTwoSingleBox) {
  const auto w = tangent_weights(fixed_points(2, 1)[0]);
  ASSERT_EQ(w.size(), 4u);
  int with_a = 0;
  for (const auto& x : w) {
    if (x.a != 0) {
      EXPECT_EQ(std::abs(x.a), 2);
      ++with_a;
    }
  }
  EXPECT_EQ(with_a, 2);
  EXPECT_NE(std::find(w.begin(), w.end(), LinearWeight{1, 0, 0}), w.end());
  EXPECT_NE(std::find(w.begin(), w.end(), LinearWeight{0, 1, 0}), w.end());
  // Tangent dimension is 2 r k at every fixed point.
  for (int k = 1; k <= 4; ++k)
    for (const auto& fp : fixed_points(2, k)) EXPECT_EQ(int(tangent_weights(fp).size()), 4 * k);
}

TEST(RankOne, MatchesExponential) {
  const auto z = z_series(NekrasovParams(1, 5));
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(z[k], e1e2_power(k, factorial_inverse(k))) << k;
  const auto f = prepotential(NekrasovParams(1, 5));
  EXPECT_TRUE(f[0].is_zero());
  EXPECT_EQ(f[1], RationalFunction(nekrasov_vars(), Polynomial(1)));
  for (int k = 2; k <= 5; ++k) EXPECT_TRUE(f[k].is_zero()) << k;
}

TEST(RankTwo, Symmetries) {
  const auto z = z_series(NekrasovParams(2, 3));
  EXPECT_EQ(z[0], RationalFunction(nekrasov_vars(), Polynomial(1)));
  const auto s = check_symmetries(z);
  EXPECT_TRUE(s.epsilon_swap);
  EXPECT_TRUE(s.a_reflection);
  EXPECT_TRUE(s.failing_orders.empty());
}

TEST(RankTwo, WorkerCountDoesNotChangeResult) {
  EXPECT_EQ(z_coefficient(2, 3, 1), z_coefficient(2, 3, 3));
}

TEST(RankTwo, MatchesOracleGolden) {
  const json g = load_golden();
  const auto f = prepotential(NekrasovParams(2, 3));
  const auto z = z_series(NekrasovParams(2, 3));
  const auto lim = prepotential_limits(f);
  EXPECT_TRUE(lim.direction_independent);
  for (const auto& o : g.at("orders")) {
    const int k = o.at("order").get<int>();
    Polynomial num, den;
    for (const auto& [e, c] : o.at("limit_numerator").items()) num += Polynomial::variable(2, std::stoi(e)) * parse_rational(c.get<std::string>());
    for (const auto& [e, c] : o.at("limit_denominator").items()) den += Polynomial::variable(2, std::stoi(e)) * parse_rational(c.get<std::string>());
    EXPECT_EQ(lim.limits[std::size_t(k)], ratfun_simplify(nekrasov_vars(), num, den)) << k;
    for (const auto& s : o.at("samples")) {
      const std::array<Rational, 3> pt{parse_rational(s.at("e1").get<std::string>()), parse_rational(s.at("e2").get<std::string>()),
                                       parse_rational(s.at("a").get<std::string>())};
      EXPECT_EQ(z[k].evaluate(pt), parse_rational(s.at("z").get<std::string>())) << k;
      EXPECT_EQ(f[k].evaluate(pt), parse_rational(s.at("f").get<std::string>())) << k;
    }
  }
}

TEST(EpsilonLimit, PoleDetection) {
  const auto z = z_series(NekrasovParams(2, 1));
  try {
    epsilon_limit(z[1]);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::pole_persists);
  }
}

TEST(SeibergWitten, WeakCouplingScaling) {
  const auto p1 = sw_periods(cplx(-1), 1e-3), p2 = sw_periods(cplx(-1), 5e-4);
  const double d1 = std::abs(p1.value * p1.value - 1.0), d2 = std::abs(p2.value * p2.value - 1.0);
  EXPECT_LT(d1, 1e-5);
  EXPECT_GT(d1 / d2, 3.6);
  EXPECT_LT(d1 / d2, 4.4);
  EXPECT_LT(p1.delta, 1e-12);
}

TEST(SeibergWitten, ConjugationAndBranchCollision) {
  const cplx u(-1, 0.3);
  const auto a = sw_periods(u, 0.2), b = sw_periods(std::conj(u), 0.2);
  EXPECT_LT(std::abs(b.value - std::conj(a.value)), 1e-12);
  try {
    sw_periods(cplx(-0.4), 0.2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::branch_collision);
  }
  EXPECT_THROW(sw_periods(cplx(-1), 0), error);
}

TEST(SeibergWitten, SpectralConvergence) {
  const cplx u(-1, 0.3);
  const auto ref = sw_periods(u, 0.2, 1024).value;
  const double e8 = std::abs(sw_periods(u, 0.2, 8).value - ref), e16 = std::abs(sw_periods(u, 0.2, 16).value - ref);
  EXPECT_LT(e16, 1e-10);
  EXPECT_GT(e8 / std::max(e16, 1e-16), 100);
}
