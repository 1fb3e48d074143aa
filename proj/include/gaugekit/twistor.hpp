#pragma once

// Contour transform F(p,q,r,s) = \oint f(z, pz + q, rz + s) dz and its checks:
// the complexified Laplace equation F_ps - F_qr = 0, and harmonicity of F on
// real points under
//
//   p = x1 + i x2,  s = x1 - i x2,  q = -x3 + i x4,  r = x3 + i x4,
//
// for which ps - qr = x1^2 + x2^2 + x3^2 + x4^2.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "gaugekit/errors.hpp"
#include "gaugekit/numerics/contour.hpp"
#include "gaugekit/numerics/finite_diff.hpp"

namespace gaugekit {

using cplx = std::complex<double>;

struct BatemanParams {
  cplx p, q, r, s;

  BatemanParams shifted(const std::array<double, 4>& d) const { return {p + d[0], q + d[1], r + d[2], s + d[3]}; }
};

/// Real point of R^4 to twistor parameters.
inline BatemanParams params_from_point(const std::array<double, 4>& x) {
  return {cplx(x[0], x[1]), cplx(-x[2], x[3]), cplx(x[2], x[3]), cplx(x[0], -x[1])};
}

struct TwistorIntegrand {
  std::string name;
  std::function<cplx(cplx z, cplx zeta1, cplx zeta2)> f;
  double inner_radius = 0;  // analyticity annulus in z; 0 means no inner bound
  double outer_radius = std::numeric_limits<double>::infinity();
  /// Extra domain test on (z, zeta1, zeta2) along the contour; empty means none.
  std::function<bool(cplx z, cplx zeta1, cplx zeta2)> in_domain;
  /// Exact transform over a circle about 0, when known.
  std::function<cplx(const BatemanParams&)> closed_form;

  friend TwistorIntegrand operator+(const TwistorIntegrand& a, const TwistorIntegrand& b) { return combine(1, a, 1, b); }
  static TwistorIntegrand combine(cplx ca, const TwistorIntegrand& a, cplx cb, const TwistorIntegrand& b) {
    TwistorIntegrand out;
    out.name = "combination";
    out.f = [=](cplx z, cplx z1, cplx z2) { return ca * a.f(z, z1, z2) + cb * b.f(z, z1, z2); };
    out.inner_radius = std::max(a.inner_radius, b.inner_radius);
    out.outer_radius = std::min(a.outer_radius, b.outer_radius);
    out.in_domain = [=](cplx z, cplx z1, cplx z2) {
      return (!a.in_domain || a.in_domain(z, z1, z2)) && (!b.in_domain || b.in_domain(z, z1, z2));
    };
    if (a.closed_form && b.closed_form)
      out.closed_form = [=](const BatemanParams& prm) { return ca * a.closed_form(prm) + cb * b.closed_form(prm); };
    return out;
  }
};

namespace twistor_catalog {

inline constexpr cplx two_pi_i{0, 2 * std::numbers::pi};

/// zeta1 zeta2 / z^2: F = 2 pi i (ps + qr).
inline TwistorIntegrand bilinear() {
  TwistorIntegrand t;
  t.name = "bilinear";
  t.f = [](cplx z, cplx z1, cplx z2) { return z1 * z2 / (z * z); };
  t.closed_form = [](const BatemanParams& b) { return two_pi_i * (b.p * b.s + b.q * b.r); };
  return t;
}

/// zeta2 / (z - zeta1), pole at q/(1-p) inside the contour:
/// F = 2 pi i (rq/(1-p)^2 + s/(1-p)).
inline TwistorIntegrand pole() {
  TwistorIntegrand t;
  t.name = "pole";
  t.f = [](cplx z, cplx z1, cplx z2) { return z2 / (z - z1); };
  t.in_domain = [](cplx z, cplx z1, cplx) { return std::abs(z - z1) > 1e-2 * std::abs(z); };
  t.closed_form = [](const BatemanParams& b) {
    const cplx w = 1.0 - b.p;
    return two_pi_i * (b.r * b.q / (w * w) + b.s / w);
  };
  return t;
}

/// exp(zeta1) / z: F = 2 pi i e^q.
inline TwistorIntegrand exponential() {
  TwistorIntegrand t;
  t.name = "exp";
  t.f = [](cplx z, cplx z1, cplx) { return std::exp(z1) / z; };
  t.closed_form = [](const BatemanParams& b) { return two_pi_i * std::exp(b.q); };
  return t;
}

/// exp(z), independent of the section and analytic on the disc: F = 0.
inline TwistorIntegrand entire() {
  TwistorIntegrand t;
  t.name = "entire";
  t.f = [](cplx z, cplx, cplx) { return std::exp(z); };
  t.closed_form = [](const BatemanParams&) { return cplx(0); };
  return t;
}

inline std::vector<std::string> names() { return {"bilinear", "pole", "exp", "entire"}; }

inline TwistorIntegrand by_name(const std::string& name) {
  if (name == "bilinear") return bilinear();
  if (name == "pole") return pole();
  if (name == "exp") return exponential();
  if (name == "entire") return entire();
  fail(errc::invalid_argument, "unknown integrand '" + name + "' (bilinear, pole, exp, entire)");
}

/// Parameters used by the checks: the pole sits at q/(1-p) = 0.2 and |1-p|^4 > 5.
inline BatemanParams default_params() { return {cplx(-0.5, 0.1), cplx(0.3, 0.0), cplx(0.4, -0.2), cplx(0.7, 0.3)}; }

}  // namespace twistor_catalog

inline cplx bateman_transform(const TwistorIntegrand& t, const BatemanParams& b, const Contour& c) {
  return contour_integrate(
      [&](cplx z) {
        const double az = std::abs(z);
        if ((t.inner_radius > 0 && az <= t.inner_radius) || az >= t.outer_radius)
          fail(errc::domain_violation, "contour leaves the integrand's analyticity annulus");
        const cplx z1 = b.p * z + b.q;
        const cplx z2 = b.r * z + b.s;
        if (t.in_domain && !t.in_domain(z, z1, z2)) fail(errc::domain_violation, "section leaves the integrand's domain on the contour");
        return t.f(z, z1, z2);
      },
      c);
}

/// |F_ps - F_qr| by 4-point cross stencils with real step h in each parameter.
inline double ultrahyperbolic_residual(const TwistorIntegrand& t, const BatemanParams& b, const Contour& c, double h) {
  auto F = [&](const std::vector<double>& d) { return bateman_transform(t, b.shifted({d[0], d[1], d[2], d[3]}), c); };
  const std::vector<double> origin(4, 0.0);
  const cplx fps = finite_diff(F, origin, h, 2, {0, 3});
  const cplx fqr = finite_diff(F, origin, h, 2, {1, 2});
  return std::abs(fps - fqr);
}

/// |Laplacian of x -> F(params_from_point(x))| by 3-point stencils.
inline double harmonic_restriction_residual(const TwistorIntegrand& t, const std::array<double, 4>& x, const Contour& c, double h) {
  auto G = [&](const std::vector<double>& y) { return bateman_transform(t, params_from_point({y[0], y[1], y[2], y[3]}), c); };
  const std::vector<double> at(x.begin(), x.end());
  cplx lap = 0;
  for (int i = 0; i < 4; ++i) lap += finite_diff(G, at, h, 2, {i});
  return std::abs(lap);
}

/// Rounding floor of a second-difference stencil on values of size |F|.
inline double stencil_rounding_floor(double scale, double h) { return 100 * std::numeric_limits<double>::epsilon() * scale / (h * h); }

}  // namespace gaugekit
