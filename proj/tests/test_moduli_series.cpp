#include <gtest/gtest.h>

#include "gaugekit/moduli_series.hpp"

using namespace gaugekit;

namespace {
std::vector<long> coeffs(const LaurentPoly& p) {
  std::vector<long> out;
  for (int e = 0; e <= p.max_degree(); ++e) out.push_back(numerator_of(p.coefficient(e)).convert_to<long>());
  return out;
}
}  // namespace

TEST(EquivariantSeries, LowOrders) {
  const auto s = equivariant_series(SeriesParams(2));
  EXPECT_EQ(s[0], 1);
  EXPECT_EQ(s[1], 0);
  EXPECT_EQ(s[2], 1);
  EXPECT_EQ(s[3], 4);
  EXPECT_EQ(s[4], 2);
  for (int g = 2; g <= 7; ++g) {
    const auto t = equivariant_series(SeriesParams(g));
    EXPECT_EQ(t[0], 1);
    EXPECT_EQ(t[1], 0);
    EXPECT_EQ(t.order(), 6 * g + 10);
  }
}

TEST(StratumSeries, LeadingTerms) {
  const SeriesParams p(2);
  const auto s1 = stratum_series(p, 1), s2 = stratum_series(p, 2);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(s1[k], 0);
  EXPECT_EQ(s1[4], 1);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(s2[k], 0);
  EXPECT_EQ(s2[8], 1);
  EXPECT_THROW(stratum_series(p, 0), error);
}

TEST(ModuliPoincare, GenusTwo) {
  EXPECT_EQ(coeffs(moduli_poincare(SeriesParams(2))), (std::vector<long>{1, 0, 1, 4, 1, 0, 1}));
  try {
    moduli_poincare(SeriesParams(2, -1, ExponentRule::printed()));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::non_exact_division);
  }
}

TEST(ModuliPoincare, ShapeForHigherGenus) {
  for (int g = 2; g <= 8; ++g) {
    const auto p = moduli_poincare(SeriesParams(g));
    EXPECT_EQ(p.min_degree(), 0);
    EXPECT_EQ(p.max_degree(), 6 * g - 6);
    EXPECT_TRUE(p.is_palindromic());
    EXPECT_EQ(p.coefficient(2), 1);
    EXPECT_EQ(p.coefficient(3), 2 * g);
    // Euler characteristic of the odd-degree rank-2 moduli space vanishes.
    Rational chi = 0;
    for (const auto& [e, c] : p.terms()) chi += (e % 2 ? -1 : 1) * c;
    EXPECT_EQ(chi, 0) << g;
    for (const auto& [e, c] : p.terms()) EXPECT_GE(c, 0);
  }
  const auto p3 = moduli_poincare(SeriesParams(3));
  EXPECT_EQ(p3.max_degree(), 12);
  EXPECT_EQ(p3.coefficient(3), 6);
}

TEST(CriticalValue, Examples) {
  EXPECT_EQ(critical_value(1), 1);
  EXPECT_EQ(critical_value(2), 5);
  EXPECT_EQ(critical_value(3), 13);
  EXPECT_THROW(critical_value(0), error);
}

TEST(Aij, Table) {
  const auto t = aij_table(6, 3);
  for (int i = -6; i <= 6; ++i) {
    EXPECT_EQ(t.at(i, 0), 0);
    EXPECT_EQ(t.at(i, 1), i == 0 ? 1 : 0);
    EXPECT_EQ(t.at(i, 2), t.at(-i, 2));
    if (std::abs(i) > 3) EXPECT_EQ(t.at(i, 2), 0);
  }
  EXPECT_NE(t.at(3, 2), 0);
}

TEST(Aij, RebuildsPoincarePolynomial) {
  for (int g = 2; g <= 6; ++g) {
    const SeriesParams p(g);
    const auto via = homology_via_aij(p);
    EXPECT_EQ(via, moduli_poincare(p)) << g;
    EXPECT_TRUE(via.is_palindromic());
  }
}

TEST(StratumIdentity, ReconciledHoldsPrintedFails) {
  for (int g = 2; g <= 6; ++g) {
    const auto r = check_stratum_identity(SeriesParams(g));
    EXPECT_TRUE(r.exact_division);
    EXPECT_TRUE(r.identity_holds) << g;
    EXPECT_TRUE(r.mismatched_degrees.empty());
    EXPECT_EQ(r.checked_through, 6 * g + 10);
    const auto bad = check_stratum_identity(SeriesParams(g, -1, ExponentRule::printed()));
    EXPECT_FALSE(bad.exact_division);
    EXPECT_EQ(bad.failure, "NonExactDivision");
  }
}

TEST(StratumIdentity, JsonCoefficients) {
  const auto j = coefficient_array(moduli_poincare(SeriesParams(2)));
  EXPECT_EQ(j, json::parse("[1,0,1,4,1,0,1]"));
}
