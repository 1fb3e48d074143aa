#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "gaugekit/errors.hpp"
#include "gaugekit/numerics/parallel.hpp"

namespace gaugekit {

using Point4 = std::array<double, 4>;

/// Box center + [-L, L]^4 sampled with n points per axis (endpoints included).
struct Grid4D {
  double half_width = 1;
  int n = 3;
  Point4 center{};

  Grid4D() = default;
  Grid4D(double L, int points, Point4 c = {}) : half_width(L), n(points), center(c) {
    if (!(L > 0)) fail(errc::invalid_argument, "grid half-width must be positive");
    if (points < 3) fail(errc::invalid_argument, "grid needs at least 3 points per axis");
  }

  double spacing() const { return 2 * half_width / (n - 1); }
  std::size_t size() const { return std::size_t(n) * n * n * n; }
  double coordinate(int axis, int i) const { return center[std::size_t(axis)] - half_width + i * spacing(); }
  Point4 point(std::size_t linear) const {
    Point4 x;
    for (int a = 3; a >= 0; --a) {
      x[std::size_t(a)] = coordinate(a, int(linear % std::size_t(n)));
      linear /= std::size_t(n);
    }
    return x;
  }
  /// Trapezoid weight along one axis.
  double axis_weight(int i) const { return (i == 0 || i == n - 1) ? 0.5 * spacing() : spacing(); }
  double weight(std::size_t linear) const {
    double w = 1;
    for (int a = 0; a < 4; ++a) {
      w *= axis_weight(int(linear % std::size_t(n)));
      linear /= std::size_t(n);
    }
    return w;
  }
};

/// Values of f at every grid point, row-major with axis 0 slowest.
template <typename F>
std::vector<double> sample_grid(const Grid4D& g, F&& f, int workers) {
  std::vector<double> out(g.size());
  const std::size_t slice = g.size() / std::size_t(g.n);
  parallel_for(std::size_t(g.n), workers, [&](std::size_t i0) {
    for (std::size_t j = 0; j < slice; ++j) out[i0 * slice + j] = f(g.point(i0 * slice + j));
  });
  return out;
}

/// Trapezoid integral of sampled values. Each axis-0 slice is tree-summed, then
/// the slices, so the result is bit-identical for any worker count.
inline double integrate_samples(const Grid4D& g, const std::vector<double>& values) {
  if (values.size() != g.size()) fail(errc::invalid_argument, "sample count does not match grid");
  const std::size_t slice = g.size() / std::size_t(g.n);
  std::vector<double> partial(std::size_t(g.n));
  std::vector<double> buf(slice);
  for (std::size_t i0 = 0; i0 < std::size_t(g.n); ++i0) {
    for (std::size_t j = 0; j < slice; ++j) buf[j] = g.weight(i0 * slice + j) * values[i0 * slice + j];
    partial[i0] = tree_sum(buf);
  }
  return tree_sum(partial);
}

/// CSV: header then x1,x2,x3,x4,value per point.
inline void write_grid_csv(const std::string& path, const Grid4D& g, const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) fail(errc::invalid_argument, "cannot open " + path);
  out << "x1,x2,x3,x4,value\n";
  out.precision(17);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto x = g.point(i);
    out << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ',' << values[i] << '\n';
  }
}

// Binary layout (little-endian): 8-byte magic "GKGRID01", int32 n, float64 L,
// 4 x float64 center, then n^4 float64 values row-major with x1 slowest.
inline void write_grid_binary(const std::string& path, const Grid4D& g, const std::vector<double>& values) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::invalid_argument, "cannot open " + path);
  out.write("GKGRID01", 8);
  const std::int32_t n = g.n;
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(&g.half_width), sizeof(double));
  out.write(reinterpret_cast<const char*>(g.center.data()), 4 * sizeof(double));
  out.write(reinterpret_cast<const char*>(values.data()), std::streamsize(values.size() * sizeof(double)));
}

inline std::pair<Grid4D, std::vector<double>> read_grid_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, "GKGRID01", 8) != 0) fail(errc::invalid_argument, "not a grid file: " + path);
  std::int32_t n;
  double L;
  Point4 c;
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  in.read(reinterpret_cast<char*>(&L), sizeof L);
  in.read(reinterpret_cast<char*>(c.data()), 4 * sizeof(double));
  Grid4D g(L, n, c);
  std::vector<double> v(g.size());
  if (!in.read(reinterpret_cast<char*>(v.data()), std::streamsize(v.size() * sizeof(double))))
    fail(errc::invalid_argument, "truncated grid file: " + path);
  return {g, std::move(v)};
}

}  // namespace gaugekit
