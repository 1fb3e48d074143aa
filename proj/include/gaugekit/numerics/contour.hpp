#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "gaugekit/errors.hpp"

namespace gaugekit {

struct Contour {
  std::complex<double> center{0, 0};
  double radius = 1;
  int samples = 64;

  Contour() = default;
  Contour(std::complex<double> c, double r, int n) : center(c), radius(r), samples(n) {
    if (!(r > 0)) fail(errc::invalid_argument, "contour radius must be positive");
    if (n < 16) fail(errc::invalid_argument, "contour needs at least 16 samples");
  }
  Contour doubled() const { return Contour(center, radius, 2 * samples); }
  std::complex<double> node(int j) const {
    return center + radius * std::polar(1.0, 2 * std::numbers::pi * j / samples);
  }
};

/// Periodic trapezoid rule for the counter-clockwise integral of f dz.
template <typename F>
std::complex<double> contour_integrate(F&& f, const Contour& c) {
  std::complex<double> sum = 0;
  for (int j = 0; j < c.samples; ++j) {
    const auto dz = std::complex<double>(0, 1) * (c.node(j) - c.center);
    const std::complex<double> v = f(c.node(j));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) fail(errc::non_finite, "integrand is not finite on the contour");
    sum += v * dz;
  }
  return sum * (2 * std::numbers::pi / c.samples);
}

}  // namespace gaugekit
