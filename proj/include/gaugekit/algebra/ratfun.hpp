#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gaugekit/algebra/polynomial.hpp"

namespace gaugekit {

/// Multivariate rational function over Q.
///
/// The denominator is kept factored into pairwise coprime monic polynomials
/// with multiplicities; every rational constant lives in the numerator.
/// After each operation gcd(numerator, denominator) is a unit, so the pair
/// (numerator, expanded denominator) is a canonical form.
///
/// A function with an empty variable list is a constant that combines with
/// any variable list.
class RationalFunction {
 public:
  struct Factor {
    Polynomial poly;
    int multiplicity = 1;
  };
  using Vars = std::vector<std::string>;

  RationalFunction() = default;
  RationalFunction(const Rational& c) : num_(c) {}  // NOLINT(implicit)
  RationalFunction(int c) : num_(Rational(c)) {}    // NOLINT(implicit)
  RationalFunction(Vars vars, Polynomial num) : vars_(std::move(vars)), num_(std::move(num)) { check_vars(); }

  /// num / (den_1 * den_2 * ...), simplified.
  static RationalFunction from_factors(Vars vars, Polynomial num, const std::vector<Polynomial>& dens) {
    RationalFunction r(std::move(vars), std::move(num));
    std::vector<Item> items;
    for (const auto& d : dens) {
      if (d.is_zero()) fail(errc::division_by_zero, "zero denominator factor");
      if (d.is_constant()) {
        r.num_ *= Rational(1) / d.constant_value();
        continue;
      }
      r.num_ *= Rational(1) / d.leading_coefficient();
      items.push_back({d.monic(), {1}});
    }
    coprimize(items, 1);
    for (auto& it : items) r.den_.push_back({std::move(it.poly), it.mult[0]});
    r.reduce();
    return r;
  }
  static RationalFunction variable(Vars vars, std::size_t index) {
    return RationalFunction(std::move(vars), Polynomial::variable(index));
  }

  const Vars& vars() const { return vars_; }
  const Polynomial& numerator() const { return num_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }
  Polynomial denominator() const {
    Polynomial d(1);
    for (const auto& f : den_) d *= f.poly.pow(static_cast<unsigned>(f.multiplicity));
    return d;
  }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    RationalFunction r;
    r.vars_ = unify(a.vars_, b.vars_);
    if (a.den_.empty() && b.den_.empty()) {
      r.num_ = a.num_ + b.num_;
      return r;
    }
    std::vector<Item> items;
    for (const auto& f : a.den_) items.push_back({f.poly, {f.multiplicity, 0}});
    for (const auto& f : b.den_) items.push_back({f.poly, {0, f.multiplicity}});
    coprimize(items, 2);
    Polynomial na = a.num_, nb = b.num_;
    for (const auto& it : items) {
      const int e = std::max(it.mult[0], it.mult[1]);
      if (e > it.mult[0]) na *= it.poly.pow(static_cast<unsigned>(e - it.mult[0]));
      if (e > it.mult[1]) nb *= it.poly.pow(static_cast<unsigned>(e - it.mult[1]));
      r.den_.push_back({it.poly, e});
    }
    r.num_ = na + nb;
    r.reduce();
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ *= Rational(-1);
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    RationalFunction r;
    r.vars_ = unify(a.vars_, b.vars_);
    r.num_ = a.num_ * b.num_;
    if (r.num_.is_zero()) return RationalFunction(r.vars_, Polynomial());
    if (a.den_.empty() && b.den_.empty()) return r;
    std::vector<Item> items;
    for (const auto& f : a.den_) items.push_back({f.poly, {f.multiplicity}});
    for (const auto& f : b.den_) items.push_back({f.poly, {f.multiplicity}});
    coprimize(items, 1);
    for (auto& it : items) r.den_.push_back({std::move(it.poly), it.mult[0]});
    r.reduce();
    return r;
  }
  friend RationalFunction operator*(const Rational& s, RationalFunction a) {
    if (s == 0) return RationalFunction(a.vars_, Polynomial());
    a.num_ *= s;
    return a;
  }

  RationalFunction inverse() const {
    if (num_.is_zero()) fail(errc::division_by_zero, "inverse of zero rational function");
    Polynomial d = denominator();
    return from_factors(vars_, d, {num_});
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  /// Sum of many terms with one shared common denominator. Much cheaper than
  /// repeated binary addition when all denominators split into linear forms.
  static RationalFunction sum(std::span<const RationalFunction> terms) {
    if (terms.empty()) return RationalFunction();
    bool all_linear = true;
    Vars vars;
    for (const auto& t : terms) {
      vars = unify(vars, t.vars_);
      for (const auto& f : t.den_) all_linear = all_linear && f.poly.total_degree() == 1;
    }
    if (!all_linear) {
      RationalFunction acc(vars, Polynomial());
      for (const auto& t : terms) acc += t;
      return acc;
    }
    // Distinct monic linear forms are pairwise coprime.
    std::map<Polynomial, int> lcm;
    for (const auto& t : terms)
      for (const auto& f : t.den_) {
        int& e = lcm[f.poly];
        e = std::max(e, f.multiplicity);
      }
    Polynomial num;
    for (const auto& t : terms) {
      std::map<Polynomial, int> own;
      for (const auto& f : t.den_) own[f.poly] = f.multiplicity;
      Polynomial n = t.num_;
      for (const auto& [p, e] : lcm) {
        auto it = own.find(p);
        int have = it == own.end() ? 0 : it->second;
        if (e > have) n *= p.pow(static_cast<unsigned>(e - have));
      }
      num += n;
    }
    RationalFunction r(vars, std::move(num));
    for (const auto& [p, e] : lcm) r.den_.push_back({p, e});
    r.reduce();
    return r;
  }

  /// Replaces variable `index` by a polynomial in the same variables.
  RationalFunction substitute(std::size_t index, const Polynomial& value) const {
    std::vector<Polynomial> dens;
    for (const auto& f : den_)
      for (int k = 0; k < f.multiplicity; ++k) dens.push_back(f.poly.substitute(index, value));
    for (const auto& d : dens)
      if (d.is_zero()) fail(errc::division_by_zero, "substitution annihilates a denominator factor");
    return from_factors(vars_, num_.substitute(index, value), dens);
  }

  /// Renames variables by a permutation; the factored denominator is kept.
  RationalFunction permuted(const std::array<std::size_t, kMaxVars>& perm) const {
    std::vector<Polynomial> dens;
    for (const auto& f : den_)
      for (int k = 0; k < f.multiplicity; ++k) dens.push_back(f.poly.permuted(perm));
    return from_factors(vars_, num_.permuted(perm), dens);
  }

  /// Exact evaluation; throws DivisionByZero at a pole.
  Rational evaluate(std::span<const Rational> point) const {
    Rational d = 1;
    for (const auto& f : den_) {
      Rational v = f.poly.evaluate(point);
      if (v == 0) fail(errc::division_by_zero, "evaluation at a pole");
      for (int k = 0; k < f.multiplicity; ++k) d *= v;
    }
    return num_.evaluate(point) / d;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.denominator() == b.denominator();
  }

  /// Canonical text: "num" for polynomials, "(num)/(den)" otherwise.
  std::string to_string() const {
    std::string n = num_.to_string(vars_);
    if (den_.empty()) return n;
    return "(" + n + ")/(" + denominator().to_string(vars_) + ")";
  }

 private:
  struct Item {
    Polynomial poly;
    std::vector<int> mult;
  };

  static Vars unify(const Vars& a, const Vars& b) {
    if (a.empty()) return b;
    if (b.empty() || a == b) return a;
    fail(errc::invalid_argument, "rational functions over different variable lists");
  }

  void check_vars() const {
    if (vars_.size() > kMaxVars) fail(errc::invalid_argument, "too many variables");
  }

  /// Refines a list of monic factors into a pairwise coprime basis; each
  /// item carries per-origin multiplicities that are split alongside.
  static void coprimize(std::vector<Item>& items, std::size_t origins) {
    auto merge_equal = [&] {
      std::map<Polynomial, std::size_t> seen;
      std::vector<Item> merged;
      for (auto& it : items) {
        auto [pos, inserted] = seen.emplace(it.poly, merged.size());
        if (inserted) {
          merged.push_back(std::move(it));
        } else {
          for (std::size_t o = 0; o < origins; ++o) merged[pos->second].mult[o] += it.mult[o];
        }
      }
      items = std::move(merged);
    };
    merge_equal();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < items.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < items.size() && !changed; ++j) {
          // Distinct monic linear forms never share a factor.
          if (items[i].poly.total_degree() == 1 && items[j].poly.total_degree() == 1) continue;
          Polynomial g = gcd(items[i].poly, items[j].poly);
          if (g.is_constant()) continue;
          Item common{g, std::vector<int>(origins, 0)};
          for (std::size_t o = 0; o < origins; ++o) common.mult[o] = items[i].mult[o] + items[j].mult[o];
          Item ri{detail::exact_quotient(items[i].poly, g).monic(), items[i].mult};
          Item rj{detail::exact_quotient(items[j].poly, g).monic(), items[j].mult};
          items.erase(items.begin() + static_cast<std::ptrdiff_t>(j));
          items.erase(items.begin() + static_cast<std::ptrdiff_t>(i));
          items.push_back(std::move(common));
          if (!ri.poly.is_constant()) items.push_back(std::move(ri));
          if (!rj.poly.is_constant()) items.push_back(std::move(rj));
          merge_equal();
          changed = true;
        }
      }
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.poly < b.poly; });
  }

  /// Cancels common factors between numerator and denominator.
  void reduce() {
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < den_.size(); ++i) {
        auto& f = den_[i];
        while (f.multiplicity > 0) {
          auto q = divide_exact(num_, f.poly);
          if (!q) break;
          num_ = std::move(*q);
          --f.multiplicity;
        }
        if (f.multiplicity > 0 && f.poly.total_degree() > 1) {
          Polynomial g = gcd(num_, f.poly);
          if (!g.is_constant()) {
            // Split a reducible factor so the shared part can cancel.
            Polynomial rest = detail::exact_quotient(f.poly, g).monic();
            int m = f.multiplicity;
            den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<Item> items;
            for (const auto& d : den_) items.push_back({d.poly, {d.multiplicity}});
            items.push_back({g, {m}});
            if (!rest.is_constant()) items.push_back({rest, {m}});
            coprimize(items, 1);
            den_.clear();
            for (auto& it : items) den_.push_back({std::move(it.poly), it.mult[0]});
            changed = true;
            break;
          }
        }
      }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(), [](const Factor& f) { return f.multiplicity == 0; }),
               den_.end());
    std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  }

  Vars vars_;
  Polynomial num_;
  std::vector<Factor> den_;
};

/// Returns f in lowest terms; arithmetic already keeps values reduced, so this
/// rebuilds from the expanded numerator and denominator.
inline RationalFunction ratfun_simplify(const RationalFunction& f) {
  return RationalFunction::from_factors(f.vars(), f.numerator(), {f.denominator()});
}

/// Simplifies a raw numerator/denominator pair.
inline RationalFunction ratfun_simplify(RationalFunction::Vars vars, const Polynomial& num, const Polynomial& den) {
  return RationalFunction::from_factors(std::move(vars), num, {den});
}

}  // namespace gaugekit
