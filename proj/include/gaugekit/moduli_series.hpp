#pragma once

// Equivariant Morse series for rank-2 odd-degree moduli over a genus-g curve.
// The exponent choices are a parameter: "reconciled" makes the stratum
// decomposition an exact identity; "printed" (CLI name "paper") halves the
// (1+t^3) and (1+t) exponents, shifts the strata by t^4, and fails exact division.

#include <map>
#include <string>
#include <vector>

#include "gaugekit/algebra/json.hpp"
#include "gaugekit/algebra/laurent.hpp"
#include "gaugekit/algebra/series.hpp"
#include "gaugekit/errors.hpp"

namespace gaugekit {

struct ExponentRule {
  std::string name;
  int (*equivariant_exponent)(int g);  // P(t) numerator (1+t^3)^e
  int (*moduli_top_exponent)(int g);   // P_M numerator (1+t^3)^e - ...
  int (*moduli_sub_exponent)(int g);   // ... - t^{2g} (1+t)^e
  int (*stratum_shift)(int g, int mu);
  int (*stratum_exponent)(int g);  // (1+t)^e in each stratum term

  static ExponentRule reconciled() {
    return {"reconciled", [](int g) { return 2 * g; }, [](int g) { return 2 * g; }, [](int g) { return 2 * g; },
            [](int g, int mu) { return 2 * g + 4 * mu - 4; }, [](int g) { return 2 * g; }};
  }
  static ExponentRule printed() {
    return {"paper", [](int g) { return g; }, [](int g) { return 2 * g; }, [](int g) { return g; },
            [](int g, int mu) { return 2 * g + 4 * mu; }, [](int g) { return 2 * g; }};
  }
  static ExponentRule by_name(const std::string& s) {
    if (s == "reconciled") return reconciled();
    if (s == "paper") return printed();
    fail(errc::invalid_argument, "unknown exponent rule '" + s + "' (reconciled, paper)");
  }
};

struct SeriesParams {
  int genus = 2;
  int order = 22;
  ExponentRule rule = ExponentRule::reconciled();

  SeriesParams() = default;
  explicit SeriesParams(int g, int ord = -1, ExponentRule r = ExponentRule::reconciled()) : genus(g), order(ord < 0 ? 6 * g + 10 : ord), rule(r) {
    if (g < 2) fail(errc::invalid_argument, "genus must be at least 2");
    if (order < 6 * g - 6) fail(errc::invalid_argument, "truncation order must be at least 6g - 6");
  }
};

namespace detail {
inline LaurentPoly t_pow(int e, const Rational& c = 1) { return LaurentPoly::monomial(e, c, "t"); }
inline LaurentPoly one_plus_t_pow(int k) { return LaurentPoly::constant(1, "t") + t_pow(k); }
inline LaurentPoly one_minus_t_pow(int k) { return LaurentPoly::constant(1, "t") - t_pow(k); }
inline LaurentPoly series_denominator() { return one_minus_t_pow(2) * one_minus_t_pow(4); }

inline TruncatedSeries<Rational> expand_ratio(const LaurentPoly& num, const LaurentPoly& den, int order) {
  return TruncatedSeries<Rational>::from_laurent(num, order) * TruncatedSeries<Rational>::from_laurent(den, order).inverse();
}
}  // namespace detail

/// (1+t^3)^e / ((1-t^4)(1-t^2)) truncated.
inline TruncatedSeries<Rational> equivariant_series(const SeriesParams& p) {
  const int e = p.rule.equivariant_exponent(p.genus);
  return detail::expand_ratio(detail::one_plus_t_pow(3).pow(e), detail::series_denominator(), p.order);
}

/// t^{d(g,mu)} (1+t)^e / (1-t^2) truncated.
inline TruncatedSeries<Rational> stratum_series(const SeriesParams& p, int mu) {
  if (mu < 1) fail(errc::invalid_argument, "mu must be positive");
  const int shift = p.rule.stratum_shift(p.genus, mu);
  const LaurentPoly num = detail::t_pow(shift) * detail::one_plus_t_pow(1).pow(p.rule.stratum_exponent(p.genus));
  return detail::expand_ratio(num, detail::one_minus_t_pow(2), p.order);
}

/// Exact quotient [(1+t^3)^a - t^{2g}(1+t)^b] / ((1-t^2)(1-t^4)); NonExactDivision otherwise.
inline LaurentPoly moduli_poincare(const SeriesParams& p) {
  const int g = p.genus;
  const LaurentPoly num = detail::one_plus_t_pow(3).pow(p.rule.moduli_top_exponent(g)) -
                          detail::t_pow(2 * g) * detail::one_plus_t_pow(1).pow(p.rule.moduli_sub_exponent(g));
  return exact_div(num, detail::series_denominator());
}

inline Integer critical_value(long mu) {
  if (mu < 1) fail(errc::invalid_argument, "mu must be positive");
  return Integer(mu) * mu + Integer(1 - mu) * (1 - mu);
}

/// a_{ij} for |i| <= i_max, 0 <= j <= j_max; entry [i + i_max][j].
struct HomologyTable {
  int i_max = 0;
  int j_max = 0;
  std::vector<std::vector<Integer>> entries;

  const Integer& at(int i, int j) const { return entries.at(std::size_t(i + i_max)).at(std::size_t(j)); }
};

/// Quotient (t^{2j} - t^{-2j})(t^j - t^{-j}) / ((t^2 - t^{-2})(t - t^{-1})).
inline LaurentPoly aij_generating(int j) {
  using detail::t_pow;
  const LaurentPoly num = (t_pow(2 * j) - t_pow(-2 * j)) * (t_pow(j) - t_pow(-j));
  const LaurentPoly den = (t_pow(2) - t_pow(-2)) * (t_pow(1) - t_pow(-1));
  return exact_div(num, den);
}

inline HomologyTable aij_table(int i_max, int j_max) {
  if (i_max < 0 || j_max < 0) fail(errc::invalid_argument, "table bounds must be non-negative");
  HomologyTable t;
  t.i_max = i_max;
  t.j_max = j_max;
  t.entries.assign(std::size_t(2 * i_max + 1), std::vector<Integer>(std::size_t(j_max + 1), Integer(0)));
  for (int j = 0; j <= j_max; ++j) {
    const LaurentPoly q = aij_generating(j);
    for (const auto& [e, c] : q.terms()) {
      if (!is_integer(c) || c < 0) fail(errc::non_exact_division, "a_ij is not a non-negative integer");
      if (e >= -i_max && e <= i_max) t.entries[std::size_t(e + i_max)][std::size_t(j)] = numerator_of(c);
    }
  }
  return t;
}

/// sum_i (sum_{j=0..g} a_ij C(2g, g+j)) t^{3g-3+i}.
inline LaurentPoly homology_via_aij(const SeriesParams& p) {
  const int g = p.genus;
  const int mid = 3 * g - 3;
  const HomologyTable t = aij_table(mid, g);
  LaurentPoly out("t");
  for (int i = -mid; i <= mid; ++i) {
    Integer total = 0;
    for (int j = 0; j <= g; ++j) total += t.at(i, j) * binomial(2 * g, g + j);
    out.add_term(mid + i, Rational(total));
  }
  return out;
}

/// Coefficientwise comparison of P against P_M + sum of strata.
struct Reconciliation {
  bool exact_division = false;
  std::string failure;  // error name when the division fails
  bool identity_holds = false;
  int checked_through = -1;
  int strata_used = 0;
  std::vector<int> mismatched_degrees;
  LaurentPoly poincare{"t"};
};

inline Reconciliation check_stratum_identity(const SeriesParams& p) {
  Reconciliation rep;
  try {
    rep.poincare = moduli_poincare(p);
    rep.exact_division = true;
  } catch (const error& e) {
    rep.failure = name(e.code());
    return rep;
  }
  const auto lhs = equivariant_series(p);
  auto rhs = TruncatedSeries<Rational>::from_laurent(rep.poincare, p.order);
  int mu = 1;
  while (p.rule.stratum_shift(p.genus, mu) <= p.order) {
    rhs = rhs + stratum_series(p, mu);
    ++mu;
  }
  rep.strata_used = mu - 1;
  rep.checked_through = p.order;
  for (int k = 0; k <= p.order; ++k)
    if (lhs[k] != rhs[k]) rep.mismatched_degrees.push_back(k);
  rep.identity_holds = rep.mismatched_degrees.empty();
  return rep;
}

inline json coefficient_array(const LaurentPoly& p) {
  json a = json::array();
  if (p.is_zero()) return a;
  for (int e = std::min(0, p.min_degree()); e <= p.max_degree(); ++e) {
    const Rational c = p.coefficient(e);
    if (is_integer(c))
      a.push_back(numerator_of(c).convert_to<long long>());
    else
      a.push_back(to_string(c));
  }
  return a;
}

}  // namespace gaugekit
