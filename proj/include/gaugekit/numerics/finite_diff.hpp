#pragma once

#include <cmath>
#include <complex>
#include <type_traits>
#include <vector>

#include "gaugekit/errors.hpp"

namespace gaugekit {

namespace detail {
inline bool finite_value(double v) { return std::isfinite(v); }
inline bool finite_value(std::complex<double> v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
}  // namespace detail

/// Central differences of f: R^d -> R (or C). order 1 takes axes[0]; order 2
/// with one axis is the 3-point second derivative, with two distinct axes the
/// 4-point cross stencil.
template <typename F>
auto finite_diff(F&& f, std::vector<double> x, double h, int order, std::vector<int> axes) {
  using R = std::decay_t<decltype(f(x))>;
  if (!(h > 0)) fail(errc::invalid_argument, "step must be positive");
  if (axes.empty() || axes.size() > 2) fail(errc::invalid_argument, "one or two axes");
  for (int a : axes)
    if (a < 0 || a >= int(x.size())) fail(errc::invalid_argument, "axis out of range");
  auto at = [&](int a, double da, int b, double db) {
    std::vector<double> y = x;
    y[std::size_t(a)] += da;
    if (b >= 0) y[std::size_t(b)] += db;
    const R v = f(y);
    if (!detail::finite_value(v)) fail(errc::non_finite, "function is not finite on the stencil");
    return v;
  };
  const int i = axes[0];
  if (order == 1) {
    if (axes.size() != 1) fail(errc::invalid_argument, "first derivative takes one axis");
    return R((at(i, h, -1, 0) - at(i, -h, -1, 0)) / (2 * h));
  }
  if (order != 2) fail(errc::invalid_argument, "order must be 1 or 2");
  if (axes.size() == 1 || axes[1] == i) return R((at(i, h, -1, 0) - 2.0 * at(i, 0, -1, 0) + at(i, -h, -1, 0)) / (h * h));
  const int j = axes[1];
  return R((at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) / (4 * h * h));
}

/// One Richardson step on the O(h^2) stencil: (4 D(h/2) - D(h)) / 3.
template <typename F>
auto finite_diff_richardson(F&& f, const std::vector<double>& x, double h, int order, const std::vector<int>& axes) {
  const auto coarse = finite_diff(f, x, h, order, axes);
  const auto fine = finite_diff(f, x, h / 2, order, axes);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace gaugekit
