#include <gtest/gtest.h>

#include <numbers>

#include "gaugekit/adhm.hpp"

using namespace gaugekit;

namespace {

constexpr double kPi = std::numbers::pi;

AdhmData centered(double rho = 1.0) { return thooft_data({{cplx(0), cplx(0)}}, {rho}); }

// Closed-form BPST data in singular gauge, written independently of the ADHM code:
// A_mu = rho^2 etabar^a_{mu nu} x_nu sigma_a / (i x^2 (x^2 + rho^2)).
double thooft_potential_norm2(const Point4& x, double rho) {
  // 't Hooft symbols etabar^a_{mu nu}: a = 1..3, mu, nu = 1..4 (4 is the time index).
  auto etabar = [](int a, int mu, int nu) -> double {
    if (mu < 3 && nu < 3) {
      const int e = (a == 0) ? (mu == 1 && nu == 2) - (mu == 2 && nu == 1)
                  : (a == 1) ? (mu == 2 && nu == 0) - (mu == 0 && nu == 2)
                             : (mu == 0 && nu == 1) - (mu == 1 && nu == 0);
      return e;
    }
    if (mu == 3 && nu < 3) return nu == a ? 1 : 0;
    if (nu == 3 && mu < 3) return mu == a ? -1 : 0;
    return 0;
  };
  const std::array<ComplexMatrix, 3> sigma = [] {
    std::array<ComplexMatrix, 3> s{ComplexMatrix(2, 2), ComplexMatrix(2, 2), ComplexMatrix(2, 2)};
    s[0] << 0, 1, 1, 0;
    s[1] << 0, cplx(0, -1), cplx(0, 1), 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  double total = 0;
  for (int mu = 0; mu < 4; ++mu) {
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    for (int k = 0; k < 3; ++k)
      for (int nu = 0; nu < 4; ++nu) a += etabar(k, mu, nu) * x[std::size_t(nu)] * sigma[std::size_t(k)];
    a *= rho * rho / (cplx(0, 1) * r2 * (r2 + rho * rho));
    total += a.squaredNorm();
  }
  return total;
}

double bpst_density(const Point4& x, double rho) {
  const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  return 48 * std::pow(rho, 4) / std::pow(r2 + rho * rho, 4);
}

double potential_norm2(const GaugeSample& s) {
  double t = 0;
  for (const auto& a : s.a_components) t += a.squaredNorm();
  return t;
}

}  // namespace

TEST(AdhmResiduals, Examples) {
  const double rho = 1.3;
  AdhmData d = AdhmData::zero(1, 2);
  d.p_map(0, 0) = rho;
  d.q_map(1, 0) = rho;
  auto r = adhm_residuals(d);
  EXPECT_NEAR(r.complex_residual, 0, 1e-15);
  EXPECT_NEAR(r.real_residual, 0, 1e-15);
  r = adhm_residuals(AdhmData::zero(1, 2));
  EXPECT_EQ(r.complex_residual, 0);
  EXPECT_EQ(r.real_residual, 0);
  d.p_map *= 2;
  r = adhm_residuals(d);
  EXPECT_NEAR(r.real_residual, 3 * rho * rho, 1e-12);
  EXPECT_THROW(AdhmData(ComplexMatrix::Zero(1, 1), ComplexMatrix::Zero(1, 1), ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(2, 1)), error);
}

TEST(AdhmResiduals, InvariantUnderUnitaryAction) {
  const AdhmData d = thooft_data({{cplx(0), cplx(0)}, {cplx(1), cplx(0)}}, {1.0, 0.5});
  ComplexMatrix u(2, 2);
  const double c = std::cos(0.4), s = std::sin(0.4);
  u << c, cplx(0, s), cplx(0, s), c;
  const auto r = adhm_residuals(act_unitary(d, u));
  EXPECT_LT(r.complex_residual, 1e-14);
  EXPECT_LT(r.real_residual, 1e-14);
}

TEST(Thooft, DataAndDuplicates) {
  const AdhmData d = centered();
  EXPECT_EQ(d.k, 1);
  EXPECT_EQ(d.r, 2);
  EXPECT_EQ(d.p_map(0, 0), cplx(1));
  EXPECT_EQ(d.q_map(1, 0), cplx(1));
  const auto r = adhm_residuals(thooft_data({{cplx(0), cplx(0)}, {cplx(1), cplx(0)}}, {1.0, 1.0}));
  EXPECT_EQ(r.complex_residual, 0);
  EXPECT_EQ(r.real_residual, 0);
  try {
    thooft_data({{cplx(0.5), cplx(0)}, {cplx(0.5), cplx(0)}}, {1.0, 2.0});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::duplicate_centers);
  }
  EXPECT_THROW(thooft_data({{cplx(0), cplx(0)}}, {-1.0}), error);
}

TEST(Connection, MatchesClosedFormPotential) {
  for (double rho : {1.0, 0.7}) {
    for (const Point4& x : {Point4{0.3, -0.2, 0.5, 0.1}, Point4{2.0, 1.0, -1.5, 0.5}, Point4{-6.0, 4.0, 3.0, -2.0}}) {
      const auto s = build_connection(centered(rho), x);
      const double want = thooft_potential_norm2(x, rho);
      EXPECT_NEAR(potential_norm2(s), want, 1e-6 * want) << rho;
      for (const auto& a : s.a_components) EXPECT_LT(anti_hermitian_defect(a), 1e-9);
    }
  }
}

TEST(Connection, DecaysLikeInverseCube) {
  const Point4 dir{0.5, 0.5, 0.5, 0.5};
  double prev = 0;
  for (double r : {10.0, 20.0, 40.0}) {
    const Point4 x{r * dir[0], r * dir[1], r * dir[2], r * dir[3]};
    const double a = std::sqrt(potential_norm2(build_connection(centered(), x, 1e-3)));
    if (prev > 0) EXPECT_NEAR(prev / a, 8, 0.1);
    prev = a;
  }
}

TEST(Connection, DegenerateDataAndCenters) {
  try {
    build_connection(AdhmData::zero(1, 2), {0, 0, 0, 0});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::kernel_dimension_mismatch);
  }
  EXPECT_NO_THROW(check_nondegenerate(AdhmData::zero(1, 2), {{0.5, 0, 0, 0}}));
  EXPECT_THROW(check_nondegenerate(AdhmData::zero(1, 2), {{0, 0, 0, 0}}), error);
  try {
    build_connection(centered(), {0, 0, 0, 0});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::singular_gauge);
  }
}

TEST(Curvature, DensityMatchesClosedForm) {
  for (double rho : {1.0, 0.6}) {
    const double center = energy_density(field_strength(centered(rho), {0, 0, 0, 0}));
    EXPECT_NEAR(center, bpst_density({0, 0, 0, 0}, rho), 1e-3 * center);
    const Point4 on_sphere{rho * 0.6, 0, -rho * 0.8, 0};
    EXPECT_NEAR(energy_density(field_strength(centered(rho), on_sphere)) / center, 1.0 / 16, 1e-4);
    for (const Point4& x : {Point4{0.4, -1.1, 0.2, 0.9}, Point4{2.5, 0.5, 0.5, -1.0}}) {
      const auto c = field_strength(centered(rho), x);
      EXPECT_NEAR(energy_density(c), bpst_density(x, rho), 1e-3 * bpst_density(x, rho));
      EXPECT_NEAR(topological_density(c), energy_density(c), 1e-3 * energy_density(c));
    }
  }
}

TEST(Curvature, ReflectionSymmetry) {
  const Point4 x{0.7, -0.3, 0.2, 1.1}, mx{-0.7, 0.3, -0.2, -1.1};
  EXPECT_NEAR(energy_density(field_strength(centered(), x)), energy_density(field_strength(centered(), mx)), 1e-8);
}

TEST(Curvature, FlatDatum) {
  const auto c = field_strength(AdhmData::zero(1, 1), {0.4, 0.3, -0.2, 0.1});
  for (const auto& f : c.f_components) EXPECT_LT(f.norm(), 1e-12);
  const auto rep = charge_and_action(AdhmData::zero(1, 1), Grid4D(2.0, 6), 1e-2);
  EXPECT_NEAR(rep.charge, 0, 1e-12);
  EXPECT_NEAR(rep.action, 0, 1e-12);
}

TEST(AsdResidual, ConstructedFields) {
  CurvatureSample c;
  for (auto& f : c.f_components) f = ComplexMatrix::Zero(2, 2);
  ComplexMatrix m(2, 2);
  m << cplx(0, 1), 2, -2, cplx(0, -3);
  c.f_components[0] = m;
  c.f_components[5] = -m;
  EXPECT_EQ(asd_residual(c), 0);
  c.f_components[5] = m;
  EXPECT_NEAR(asd_residual(c), std::sqrt(2.0) * m.norm(), 1e-14);
}

TEST(ChargeAndAction, CoarseGridResidualFloor) {
  const auto rep = charge_and_action(centered(), Grid4D(4.0, 17), 1e-2, 2);
  EXPECT_LE(rep.max_asd_residual, 1e-4 * rep.max_field_norm);
  EXPECT_NEAR(rep.max_field_norm, std::sqrt(48.0), 0.05);
  EXPECT_NEAR(rep.charge, 1, 0.05);
  EXPECT_NEAR(rep.action / (8 * kPi * kPi), rep.charge, 1e-3);
}

TEST(ChargeAndAction, TranslationCovariance) {
  const Grid4D grid(4.0, 17);
  const auto a = charge_and_action(centered(), grid, 1e-2);
  const auto b = charge_and_action(thooft_data({{cplx(0.3, -0.2), cplx(0.1, 0.25)}}, {1.0}), Grid4D(4.0, 17, {0.3, -0.2, 0.1, 0.25}), 1e-2);
  EXPECT_NEAR(a.charge, b.charge, 1e-3);
}

TEST(GaugeTransform, InvarianceOfEnergy) {
  const AdhmData d = centered();
  std::vector<GaugeSample> samples;
  for (const Point4& x : {Point4{0.3, 0.2, -0.1, 0.5}, Point4{-1.0, 0.4, 0.8, 0.2}, Point4{1.5, -0.5, 0.3, -0.9}})
    samples.push_back(build_connection(d, x, 1e-4));

  const auto same = gauge_transform(samples, [](const Point4&) { return ComplexMatrix(ComplexMatrix::Identity(2, 2)); });
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t mu = 0; mu < 4; ++mu) EXPECT_LT((same[i].a_components[mu] - samples[i].a_components[mu]).norm(), 1e-14);

  ComplexMatrix g0(2, 2);
  g0 << std::polar(1.0, 0.3) * std::cos(0.5), std::sin(0.5), -std::sin(0.5), std::polar(1.0, -0.3) * std::cos(0.5);
  const auto constant = gauge_transform(samples, [&](const Point4&) { return g0; });
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t mu = 0; mu < 4; ++mu)
      EXPECT_LT((constant[i].a_components[mu] - g0 * samples[i].a_components[mu] * g0.adjoint()).norm(), 1e-12);

  const auto rotated = gauge_transform(samples, [](const Point4& x) {
    const double theta = 0.8 * x[0] - 0.5 * x[2] + 0.2;
    ComplexMatrix g = ComplexMatrix::Zero(2, 2);
    g(0, 0) = std::polar(1.0, theta);
    g(1, 1) = std::polar(1.0, -theta);
    return g;
  });
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double before = energy_density(curvature(samples[i])), after = energy_density(curvature(rotated[i]));
    EXPECT_NEAR(before, after, 1e-8);
    EXPECT_NEAR(asd_residual(curvature(samples[i])), asd_residual(curvature(rotated[i])), 1e-8);
  }
  EXPECT_THROW(gauge_transform(samples, [](const Point4&) { return ComplexMatrix(2 * ComplexMatrix::Identity(2, 2)); }), error);
}

TEST(ExistenceThreshold, Examples) {
  EXPECT_TRUE(existence_threshold(LieGroup::SU, 2, 1));
  EXPECT_FALSE(existence_threshold(LieGroup::SU, 5, 2));
  EXPECT_TRUE(existence_threshold(LieGroup::SU, 5, 3));
  EXPECT_FALSE(existence_threshold(LieGroup::G2, 0, 1));
  EXPECT_TRUE(existence_threshold(LieGroup::G2, 0, 2));
  EXPECT_TRUE(existence_threshold(LieGroup::E8, 0, 3));
  EXPECT_FALSE(existence_threshold(LieGroup::F4, 0, 2));
  EXPECT_FALSE(existence_threshold(LieGroup::Sp, 3, 2));
  EXPECT_TRUE(existence_threshold(LieGroup::Spin, 8, 2));
  EXPECT_FALSE(existence_threshold(LieGroup::Spin, 9, 2));
  try {
    existence_threshold(LieGroup::Spin, 6, 3);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unsupported_group);
  }
  EXPECT_THROW(parse_group("SO"), error);
}

TEST(ModuliDimension, Examples) {
  EXPECT_EQ(moduli_dimension(1), 5);
  EXPECT_EQ(moduli_dimension(2), 13);
  EXPECT_EQ(moduli_dimension(10), 77);
  EXPECT_THROW(moduli_dimension(0), error);
}
