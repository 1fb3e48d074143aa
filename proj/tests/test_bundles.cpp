#include <gtest/gtest.h>

#include <numeric>

#include "gaugekit/bundles.hpp"

using namespace gaugekit;

namespace {
std::vector<long> as_longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.convert_to<long>());
  return out;
}

// Sequence of (r, d) pairs visited by the plain Euclidean algorithm on (r, d mod r).
std::vector<std::pair<long, long>> euclid_pairs(long r, long d) {
  std::vector<std::pair<long, long>> out;
  while (r > 1) {
    d = ((d % r) + r) % r;
    out.emplace_back(r, d);
    r -= d;
  }
  return out;
}
}  // namespace

TEST(LineCohomology, Examples) {
  EXPECT_EQ(as_longs(line_cohomology_pn(1, -2)), (std::vector<long>{0, 1}));
  EXPECT_EQ(as_longs(line_cohomology_pn(3, -2)), (std::vector<long>{0, 0, 0, 0}));
  EXPECT_EQ(as_longs(line_cohomology_pn(3, 2)), (std::vector<long>{10, 0, 0, 0}));
  for (long p : {-1, -2, -3}) EXPECT_EQ(as_longs(line_cohomology_pn(3, p)), (std::vector<long>(4, 0)));
}

TEST(LineCohomology, SerreDualityAndEulerCharacteristic) {
  for (long n = 1; n <= 4; ++n)
    for (long p = -10; p <= 10; ++p) {
      const auto h = line_cohomology_pn(n, p), hd = line_cohomology_pn(n, -p - n - 1);
      for (long i = 0; i <= n; ++i) EXPECT_EQ(h[std::size_t(i)], hd[std::size_t(n - i)]);
      // chi(O(p)) = C(p + n, n) as a polynomial in p.
      Integer chi = 0, poly = 1;
      for (long i = 0; i <= n; ++i) chi += (i % 2 ? -1 : 1) * h[std::size_t(i)];
      for (long i = 1; i <= n; ++i) poly *= (p + i);
      EXPECT_EQ(chi * factorial(n), poly);
    }
}

TEST(RiemannRoch, Examples) {
  const BundleSymbol l(1, 3, 2);
  EXPECT_EQ(rr_curve(l), 2);
  EXPECT_EQ(known_cohomology(l), (std::pair<long, long>{2, 0}));
  const BundleSymbol e(2, -3, 1);
  EXPECT_EQ(rr_curve(e), -3);
  EXPECT_EQ(known_cohomology(e), (std::pair<long, long>{0, 3}));
  EXPECT_EQ(rr_curve(BundleSymbol(1, 0, 1)), 0);
  EXPECT_FALSE(known_cohomology(BundleSymbol(2, 1, 1)).has_value());
}

TEST(AtiyahTree, FiveThree) {
  const auto t = atiyah_tree(5, 3);
  ASSERT_EQ(t.steps.size(), 4u);
  EXPECT_EQ(t.steps[0].kind, StepKind::extension);
  EXPECT_EQ(t.steps[0].trivial_rank, 3);
  EXPECT_EQ(t.steps[0].operand, BundleSymbol(2, 3, 1));
  EXPECT_EQ(t.steps[1].kind, StepKind::tensor);
  EXPECT_EQ(t.steps[1].twist, 1);
  EXPECT_EQ(t.steps[1].operand, BundleSymbol(2, 1, 1));
  EXPECT_EQ(t.steps[2].kind, StepKind::extension);
  EXPECT_EQ(t.steps[2].trivial_rank, 1);
  EXPECT_EQ(t.steps[2].operand, BundleSymbol(1, 1, 1));
  EXPECT_EQ(t.steps[3].kind, StepKind::tensor);
  EXPECT_EQ(t.steps[3].operand, BundleSymbol(1, 0, 1));
  EXPECT_EQ(t.replay(), BundleSymbol(5, 3, 1));
  // H^1 of the dual of E_{2,3} is 3-dimensional, matching the three trivial summands.
  EXPECT_EQ(t.steps[0].h1_operand_dual, 3);
}

TEST(AtiyahTree, SmallCases) {
  const auto t21 = atiyah_tree(2, 1);
  ASSERT_EQ(t21.count(StepKind::extension), 1);
  EXPECT_EQ(t21.steps[0].operand, BundleSymbol(1, 1, 1));
  EXPECT_TRUE(atiyah_tree(1, 0).steps.empty());
  try {
    atiyah_tree(4, 2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_coprime);
  }
}

TEST(AtiyahTree, ExtensionsFollowEuclid) {
  for (long r = 1; r <= 12; ++r)
    for (long d = -13; d <= 13; ++d) {
      if (std::gcd(r, ((d % r) + r) % r) != 1) continue;
      const auto t = atiyah_tree(r, d);
      EXPECT_EQ(t.replay(), BundleSymbol(r, d, 1));
      std::vector<std::pair<long, long>> ext;
      for (const auto& s : t.steps)
        if (s.kind == StepKind::extension) ext.emplace_back(s.bundle.rank, s.bundle.degree);
      const auto want = euclid_pairs(r, d);
      ASSERT_EQ(ext.size(), want.size()) << r << "," << d;
      for (std::size_t i = 0; i < ext.size(); ++i) {
        EXPECT_EQ(ext[i].first, want[i].first);
        EXPECT_EQ(((ext[i].second % ext[i].first) + ext[i].first) % ext[i].first, want[i].second);
      }
    }
}

TEST(FTower, Examples) {
  EXPECT_TRUE(f_tower(1).steps.empty());
  const auto t2 = f_tower(2);
  ASSERT_EQ(t2.steps.size(), 1u);
  EXPECT_EQ(t2.replay(), BundleSymbol(2, 0, 1));
  const auto t4 = f_tower(4);
  EXPECT_EQ(t4.steps.size(), 3u);
  EXPECT_EQ(t4.replay(), BundleSymbol(4, 0, 1));
}

TEST(NarasimhanSeshadri, Examples) {
  const auto u = ns_matrices(2, 1);
  ComplexMatrix a(2, 2), b(2, 2);
  a << 0, 1, 1, 0;
  b << -1, 0, 0, 1;
  EXPECT_LT((u.a_matrix - a).norm(), 1e-15);
  EXPECT_LT((u.b_matrix - b).norm(), 1e-15);
  EXPECT_LT((group_commutator(u) + ComplexMatrix::Identity(2, 2)).norm(), 1e-15);
  const auto u3 = ns_matrices(3, 1);
  EXPECT_LT(std::abs(u3.zeta - std::polar(1.0, 2 * std::numbers::pi / 3)), 1e-15);
  EXPECT_LE(commutator_defect(u3), 1e-12);
  try {
    ns_matrices(2, 2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_coprime);
  }
}

TEST(NarasimhanSeshadri, AllCoprimePairsAreIrreducible) {
  for (long r = 1; r <= 12; ++r)
    for (long d = -13; d <= 13; ++d) {
      if (std::gcd(r, ((d % r) + r) % r) != 1) continue;
      const auto u = ns_matrices(r, d);
      EXPECT_LE(commutator_defect(u), 1e-12) << r << "," << d;
      EXPECT_TRUE(is_unitary(u.a_matrix, 1e-12));
      EXPECT_TRUE(is_unitary(u.b_matrix, 1e-12));
      if (r <= 6) EXPECT_EQ(commutant_dimension(u), 1) << r << "," << d;
    }
}

TEST(Stability, Examples) {
  EXPECT_TRUE(nu_stability(0, 1));
  EXPECT_FALSE(nu_stability(1, 2));
  EXPECT_TRUE(nu_stability(-1, 0));
}
