#pragma once

#include <cmath>
#include <complex>

namespace gaugekit {

struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  static Quaternion from_vector(double x1, double x2, double x3, double x4) { return {x4, x1, x2, x3}; }

  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  Quaternion inverse() const {
    const double n = norm2();
    return {w / n, -x / n, -y / n, -z / n};
  }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
  // Hamilton product, i*j = k.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  // H = C + Cj: q = (w + i x) + (y + i z) j.
  std::complex<double> c1() const { return {w, x}; }
  std::complex<double> c2() const { return {y, z}; }
};

}  // namespace gaugekit
