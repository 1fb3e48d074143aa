#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaugekit/algebra/rational.hpp"

namespace gaugekit {

inline constexpr std::size_t kMaxVars = 4;

struct Monomial {
  std::array<std::int32_t, kMaxVars> exp{};

  int degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = a.exp[i] + b.exp[i];
    return m;
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = a.exp[i] - b.exp[i];
    return m;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, variable 0 most significant; leading term first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exp > b.exp;
  }
};

/// Sparse multivariate polynomial over Q in at most kMaxVars indexed variables.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& c) { add_term(Monomial{}, c); }  // NOLINT(implicit)
  Polynomial(int c) : Polynomial(Rational(c)) {}               // NOLINT(implicit)

  static Polynomial variable(std::size_t index, int power = 1) {
    Monomial m;
    m.exp[index] = power;
    Polynomial p;
    p.add_term(m, 1);
    return p;
  }
  /// c0 + sum_i coeffs[i] * x_i
  static Polynomial linear(const Rational& c0, std::span<const Rational> coeffs) {
    Polynomial p(c0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Monomial m;
      m.exp[i] = 1;
      p.add_term(m, coeffs[i]);
    }
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }
  Rational constant_value() const {
    if (terms_.empty()) return 0;
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  std::size_t size() const { return terms_.size(); }

  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  int degree_in(std::size_t v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.exp[v]));
    return d;
  }
  /// Lowest power of variable v dividing every term.
  int order_in(std::size_t v) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.exp[v];
    for (const auto& [m, c] : terms_) d = std::min(d, static_cast<int>(m.exp[v]));
    return d;
  }
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(int s, Polynomial a) { return a *= Rational(s); }
  friend Polynomial operator*(Polynomial a, int s) { return a *= Rational(s); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned n) const {
    Polynomial r(1), base = *this;
    while (n) {
      if (n & 1u) r *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return r;
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
  }

  /// Scaled so the grlex-leading coefficient is 1.
  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    r *= Rational(1) / leading_coefficient();
    return r;
  }

  /// Coefficients with respect to variable v: power -> polynomial free of v.
  std::map<int, Polynomial> coefficients_in(std::size_t v) const {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : terms_) {
      Monomial rest = m;
      rest.exp[v] = 0;
      out[m.exp[v]].add_term(rest, c);
    }
    return out;
  }
  Polynomial coefficient_in(std::size_t v, int power) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
      if (m.exp[v] == power) {
        Monomial rest = m;
        rest.exp[v] = 0;
        out.add_term(rest, c);
      }
    return out;
  }

  /// Replaces variable v by the polynomial `value`.
  Polynomial substitute(std::size_t v, const Polynomial& value) const {
    std::map<int, Polynomial> by_power = coefficients_in(v);
    Polynomial r;
    Polynomial power(1);
    int current = 0;
    for (const auto& [e, coeff] : by_power) {
      while (current < e) {
        power *= value;
        ++current;
      }
      r += coeff * power;
    }
    return r;
  }

  /// Renames variables: variable i becomes variable perm[i].
  Polynomial permuted(const std::array<std::size_t, kMaxVars>& perm) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      Monomial n;
      for (std::size_t i = 0; i < kMaxVars; ++i) n.exp[perm[i]] += m.exp[i];
      r.add_term(n, c);
    }
    return r;
  }

  Rational evaluate(std::span<const Rational> point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < kMaxVars; ++i)
        for (int k = 0; k < m.exp[i]; ++k) term *= point[i];
      total += term;
    }
    return total;
  }

  bool uses_variable(std::size_t v) const {
    for (const auto& [m, c] : terms_)
      if (m.exp[v] > 0) return true;
    return false;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Total order used for canonical sorting of factor lists.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    GrlexGreater gt;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first)) return gt(ia->first, ib->first);
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c0] : terms_) {
      Rational c = c0;
      bool neg = c < 0;
      if (neg) c = -c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (m.exp[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (m.exp[i] != 1) mono += "^" + std::to_string(m.exp[i]);
      }
      if (mono.empty())
        out += to_short_string(c);
      else if (c == 1)
        out += mono;
      else
        out += to_short_string(c) + "*" + mono;
    }
    return out;
  }

 private:
  Terms terms_;
};

/// Exact quotient a / b in Q[x], or nullopt when b does not divide a.
inline std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  Polynomial q;
  Polynomial r = a;
  const Monomial& lb = b.leading_monomial();
  const Rational inv_lc = Rational(1) / b.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    Monomial m = lr / lb;
    Rational c = r.leading_coefficient() * inv_lc;
    Polynomial step;
    step.add_term(m, c);
    q += step;
    r -= b.times_monomial(m) * c;
  }
  return q;
}

inline Polynomial gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

inline int highest_variable(const Polynomial& a, const Polynomial& b) {
  for (int v = static_cast<int>(kMaxVars) - 1; v >= 0; --v)
    if (a.uses_variable(static_cast<std::size_t>(v)) || b.uses_variable(static_cast<std::size_t>(v))) return v;
  return -1;
}

inline Polynomial content_in(const Polynomial& p, std::size_t v) {
  Polynomial g;
  for (const auto& [e, c] : p.coefficients_in(v)) {
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) fail(errc::non_exact_division, "internal: expected exact polynomial division");
  return *q;
}

/// Pseudo-remainder of a by b with respect to variable v.
inline Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v) {
  const int db = b.degree_in(v);
  const Polynomial lc_b = b.coefficient_in(v, db);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const int dr = r.degree_in(v);
    Monomial shift;
    shift.exp[v] = dr - db;
    r = lc_b * r - r.coefficient_in(v, dr) * b.times_monomial(shift);
  }
  return r;
}

}  // namespace detail

/// Monic gcd over Q, via recursive content / primitive-PRS elimination.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.total_degree() == 1 && b.total_degree() == 1) {
    Polynomial ma = a.monic();
    return ma == b.monic() ? ma : Polynomial(1);
  }
  const int vi = detail::highest_variable(a, b);
  const auto v = static_cast<std::size_t>(vi);
  if (!a.uses_variable(v)) return gcd(a, detail::content_in(b, v));
  if (!b.uses_variable(v)) return gcd(detail::content_in(a, v), b);

  const Polynomial ca = detail::content_in(a, v), cb = detail::content_in(b, v);
  Polynomial p1 = detail::exact_quotient(a, ca), p2 = detail::exact_quotient(b, cb);
  const Polynomial c = gcd(ca, cb);
  if (p1.degree_in(v) < p2.degree_in(v)) std::swap(p1, p2);
  while (true) {
    Polynomial r = detail::pseudo_remainder(p1, p2, v);
    if (r.is_zero()) {
      p1 = p2;
      break;
    }
    if (r.degree_in(v) == 0) {
      p1 = Polynomial(1);
      break;
    }
    p1 = std::move(p2);
    p2 = detail::exact_quotient(r, detail::content_in(r, v));
  }
  Polynomial g = detail::exact_quotient(p1, detail::content_in(p1, v));
  return (c * g).monic();
}

}  // namespace gaugekit
