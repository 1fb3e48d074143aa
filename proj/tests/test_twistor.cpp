#include <gtest/gtest.h>

#include "gaugekit/twistor.hpp"

using namespace gaugekit;

namespace {
const Contour unit(0, 1, 128);
const cplx two_pi_i(0, 2 * std::numbers::pi);
}  // namespace

TEST(Bateman, ClosedForms) {
  const BatemanParams b = twistor_catalog::default_params();
  const cplx p = b.p, q = b.q, r = b.r, s = b.s;
  EXPECT_LT(std::abs(bateman_transform(twistor_catalog::bilinear(), b, unit) - two_pi_i * (p * s + q * r)), 1e-12);
  const cplx w = 1.0 - p;
  EXPECT_LT(std::abs(bateman_transform(twistor_catalog::pole(), b, unit) - two_pi_i * (r * q / (w * w) + s / w)), 1e-12);
  EXPECT_LT(std::abs(bateman_transform(twistor_catalog::exponential(), b, unit) - two_pi_i * std::exp(q)), 1e-12);
  for (const auto& prm : {b, BatemanParams{cplx(2, 1), cplx(-1), cplx(0.5), cplx(0, 3)}})
    EXPECT_LT(std::abs(bateman_transform(twistor_catalog::entire(), prm, unit)), 1e-12);
}

TEST(Bateman, CombinationIsLinear) {
  const auto f = TwistorIntegrand::combine(cplx(2, -1), twistor_catalog::bilinear(), cplx(0.5), twistor_catalog::exponential());
  const auto b = twistor_catalog::default_params();
  EXPECT_LT(std::abs(bateman_transform(f, b, unit) - f.closed_form(b)), 1e-12);
}

TEST(Bateman, DomainViolations) {
  // Pole of zeta2/(z - zeta1) sits on the unit circle when q/(1-p) has modulus 1.
  const BatemanParams on_circle{cplx(0), cplx(1), cplx(0), cplx(1)};
  try {
    bateman_transform(twistor_catalog::pole(), on_circle, unit);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::domain_violation);
  }
  auto annulus = twistor_catalog::bilinear();
  annulus.inner_radius = 2;
  EXPECT_THROW(bateman_transform(annulus, twistor_catalog::default_params(), unit), error);
}

TEST(Ultrahyperbolic, Residuals) {
  const auto b = twistor_catalog::default_params();
  EXPECT_LE(ultrahyperbolic_residual(twistor_catalog::bilinear(), b, unit, 0.1), 1e-10);
  for (const auto& f : {twistor_catalog::pole(), twistor_catalog::exponential()}) {
    const double scale = std::abs(bateman_transform(f, b, unit));
    EXPECT_LE(ultrahyperbolic_residual(f, b, unit, 1e-3), 1e-6 * scale) << f.name;
  }
}

TEST(Ultrahyperbolic, SecondOrderDecayForPole) {
  const auto f = twistor_catalog::pole();
  const auto b = twistor_catalog::default_params();
  const double r1 = ultrahyperbolic_residual(f, b, unit, 4e-2), r2 = ultrahyperbolic_residual(f, b, unit, 2e-2);
  EXPECT_GT(std::log2(r1 / r2), 1.9);
}

TEST(Harmonic, RestrictionToRealSlice) {
  const std::array<double, 4> x{-0.3, 0.1, 0.1, -0.2};
  EXPECT_LE(harmonic_restriction_residual(twistor_catalog::bilinear(), x, unit, 0.1), 1e-9);
  EXPECT_LE(harmonic_restriction_residual(twistor_catalog::entire(), x, unit, 1e-2), 1e-9);
  const auto pole = twistor_catalog::pole();
  const double scale = std::abs(bateman_transform(pole, params_from_point(x), unit));
  EXPECT_LE(harmonic_restriction_residual(pole, x, unit, 1e-3), 1e-5 * scale);
}

TEST(Harmonic, ChosenCoordinatesGiveEuclideanNorm) {
  const std::array<double, 4> x{0.4, -1.2, 0.7, 0.25};
  const auto b = params_from_point(x);
  const double n2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  EXPECT_LT(std::abs(b.p * b.s - b.q * b.r - n2), 1e-14);
}
