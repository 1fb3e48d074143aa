#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gaugekit/algebra/rational.hpp"

namespace gaugekit {

/// Laurent polynomial in one formal variable with exact rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::string var) : var_(std::move(var)) {}
  LaurentPoly(std::string var, const Terms& terms) : var_(std::move(var)) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPoly constant(const Rational& c, std::string var = "t") {
    LaurentPoly p(std::move(var));
    p.add_term(0, c);
    return p;
  }
  static LaurentPoly monomial(int e, const Rational& c = 1, std::string var = "t") {
    LaurentPoly p(std::move(var));
    p.add_term(e, c);
    return p;
  }
  /// Builds from dense coefficients starting at exponent `low`.
  static LaurentPoly from_coefficients(const std::vector<Rational>& coeffs, int low = 0,
                                       std::string var = "t") {
    LaurentPoly p(std::move(var));
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(low + static_cast<int>(i), coeffs[i]);
    return p;
  }

  const std::string& var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  Rational coefficient(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(int e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly(a.var_) - a; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.var_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a) {
    LaurentPoly r(a.var_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly r = constant(1, var_);
    LaurentPoly base = *this;
    while (n) {
      if (n & 1u) r = r * base;
      base = base * base;
      n >>= 1u;
    }
    return r;
  }

  /// t -> t^{-1}
  LaurentPoly inverted() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.add_term(-e, c);
    return r;
  }

  bool is_palindromic() const {
    if (is_zero()) return true;
    int s = min_degree() + max_degree();
    for (const auto& [e, c] : terms_)
      if (coefficient(s - e) != c) return false;
    return true;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->second;
      bool neg = c < 0;
      if (neg) c = -c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      bool unit = (c == 1);
      if (!unit || it->first == 0) out += to_short_string(c);
      if (it->first != 0) {
        if (!unit) out += "*";
        out += var_;
        if (it->first != 1) out += "^" + std::to_string(it->first);
      }
    }
    return out;
  }

 private:
  std::string var_ = "t";
  Terms terms_;
};

/// Exact quotient a / b. Throws NonExactDivision when the remainder is nonzero.
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "Laurent division by zero");
  if (a.is_zero()) return LaurentPoly(a.var());
  // Strip the unit t^k factors, then run ordinary long division in Q[t].
  const int a_low = a.min_degree(), b_low = b.min_degree();
  const int a_deg = a.max_degree() - a_low, b_deg = b.max_degree() - b_low;
  std::vector<Rational> rem(static_cast<std::size_t>(a_deg) + 1);
  for (const auto& [e, c] : a.terms()) rem[static_cast<std::size_t>(e - a_low)] = c;
  std::vector<Rational> div(static_cast<std::size_t>(b_deg) + 1);
  for (const auto& [e, c] : b.terms()) div[static_cast<std::size_t>(e - b_low)] = c;

  LaurentPoly q(a.var());
  const Rational lead = div.back();
  for (int i = a_deg - b_deg; i >= 0; --i) {
    const Rational f = rem[static_cast<std::size_t>(i + b_deg)] / lead;
    if (f == 0) continue;
    for (int j = 0; j <= b_deg; ++j) rem[static_cast<std::size_t>(i + j)] -= f * div[static_cast<std::size_t>(j)];
    q.add_term(i + a_low - b_low, f);
  }
  for (const auto& c : rem)
    if (c != 0) fail(errc::non_exact_division, "(" + a.to_string() + ") / (" + b.to_string() + ") leaves a remainder");
  return q;
}

enum class laurent_op { add, mul, exact_div };

inline LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, laurent_op op) {
  switch (op) {
    case laurent_op::add: return a + b;
    case laurent_op::mul: return a * b;
    case laurent_op::exact_div: return exact_div(a, b);
  }
  return a;
}

}  // namespace gaugekit
