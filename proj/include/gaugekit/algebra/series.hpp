#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaugekit/algebra/laurent.hpp"
#include "gaugekit/algebra/ratfun.hpp"

namespace gaugekit {

/// Power series c_0 + c_1 x + ... + c_N x^N known only through order N.
/// Coeff is Rational or RationalFunction.
template <typename Coeff>
class TruncatedSeries {
 public:
  TruncatedSeries() : TruncatedSeries("x", 0) {}
  TruncatedSeries(std::string var, int order) : var_(std::move(var)), coeffs_(static_cast<std::size_t>(order) + 1, Coeff(0)) {
    if (order < 0) fail(errc::invalid_argument, "negative truncation order");
  }
  TruncatedSeries(std::string var, std::vector<Coeff> coeffs) : var_(std::move(var)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(errc::invalid_argument, "series needs at least a constant term");
  }

  static TruncatedSeries one(std::string var, int order) {
    TruncatedSeries s(std::move(var), order);
    s.coeffs_[0] = Coeff(1);
    return s;
  }
  /// Truncates a Laurent polynomial with no negative exponents.
  static TruncatedSeries from_laurent(const LaurentPoly& p, int order) requires std::is_same_v<Coeff, Rational> {
    if (!p.is_zero() && p.min_degree() < 0) fail(errc::invalid_argument, "negative exponent in power series");
    TruncatedSeries s(p.var(), order);
    for (const auto& [e, c] : p.terms())
      if (e <= order) s.coeffs_[static_cast<std::size_t>(e)] = c;
    return s;
  }

  const std::string& var() const { return var_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  const Coeff& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Coeff& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  TruncatedSeries truncated(int order) const {
    if (order > this->order()) fail(errc::invalid_argument, "cannot extend a truncated series");
    return TruncatedSeries(var_, std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(a.var_, n);
    for (int k = 0; k <= n; ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(a.var_, n);
    for (int k = 0; k <= n; ++k) r[k] = a[k] - b[k];
    return r;
  }
  /// Naive O(N^2) convolution; results never claim terms past min order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(a.var_, n);
    for (int i = 0; i <= n; ++i) {
      if (is_zero_coeff(a[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (is_zero_coeff(b[j])) continue;
        r[i + j] = r[i + j] + a[i] * b[j];
      }
    }
    return r;
  }
  friend TruncatedSeries operator*(const Coeff& s, const TruncatedSeries& a) {
    TruncatedSeries r(a.var_, a.order());
    for (int k = 0; k <= a.order(); ++k) r[k] = s * a[k];
    return r;
  }

  /// Multiplicative inverse; requires an invertible constant term.
  TruncatedSeries inverse() const {
    if (is_zero_coeff(coeffs_[0])) fail(errc::division_by_zero, "series with zero constant term is not invertible");
    const Coeff inv0 = Coeff(1) / coeffs_[0];
    TruncatedSeries r(var_, order());
    r[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
      Coeff acc(0);
      for (int j = 1; j <= k; ++j)
        if (!is_zero_coeff(coeffs_[static_cast<std::size_t>(j)])) acc = acc + (*this)[j] * r[k - j];
      r[k] = -(inv0 * acc);
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

 private:
  static bool is_zero_coeff(const Coeff& c) {
    if constexpr (std::is_same_v<Coeff, Rational>)
      return c == 0;
    else
      return c.is_zero();
  }

  std::string var_;
  std::vector<Coeff> coeffs_;
};

namespace detail {
template <typename Coeff>
bool coeff_is_zero(const Coeff& c) {
  if constexpr (std::is_same_v<Coeff, Rational>)
    return c == 0;
  else
    return c.is_zero();
}
template <typename Coeff>
bool coeff_is_one(const Coeff& c) {
  if constexpr (std::is_same_v<Coeff, Rational>)
    return c == 1;
  else
    return c.is_constant() && c.numerator().constant_value() == 1;
}
}  // namespace detail

/// log(s) through the order of s via log(1+u) = sum (-1)^{n+1} u^n / n.
template <typename Coeff>
TruncatedSeries<Coeff> series_log(const TruncatedSeries<Coeff>& s) {
  if (!detail::coeff_is_one(s[0])) fail(errc::bad_constant_term, "log needs constant term 1");
  const int n = s.order();
  TruncatedSeries<Coeff> u = s;
  u[0] = Coeff(0);
  TruncatedSeries<Coeff> result(s.var(), n);
  TruncatedSeries<Coeff> power = u;
  for (int k = 1; k <= n; ++k) {
    const Rational w = Rational((k % 2) ? 1 : -1, k);
    result = result + Coeff(w) * power;
    if (k < n) power = power * u;
  }
  return result;
}

/// exp(s) for s with zero constant term; inverse helper for series_log.
template <typename Coeff>
TruncatedSeries<Coeff> series_exp(const TruncatedSeries<Coeff>& s) {
  if (!detail::coeff_is_zero(s[0])) fail(errc::bad_constant_term, "exp needs constant term 0");
  const int n = s.order();
  auto result = TruncatedSeries<Coeff>::one(s.var(), n);
  TruncatedSeries<Coeff> power = s;
  Rational inv_fact = 1;
  for (int k = 1; k <= n; ++k) {
    inv_fact /= k;
    result = result + Coeff(inv_fact) * power;
    if (k < n) power = power * s;
  }
  return result;
}

}  // namespace gaugekit
