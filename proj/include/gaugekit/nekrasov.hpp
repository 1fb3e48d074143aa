#pragma once

// Instanton counting on C^2 for U(1) and SU(2): fixed points are tuples of
// Young diagrams, Z = sum_k Lambda^k sum_fp prod 1/weights, F = e1 e2 log Z.
// Variables are (e1, e2, a); rank 2 uses Coulomb offsets (a, -a).

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "gaugekit/algebra/json.hpp"
#include "gaugekit/algebra/partition.hpp"
#include "gaugekit/algebra/ratfun.hpp"
#include "gaugekit/algebra/series.hpp"
#include "gaugekit/errors.hpp"
#include "gaugekit/numerics/parallel.hpp"

namespace gaugekit {

inline const RationalFunction::Vars& nekrasov_vars() {
  static const RationalFunction::Vars v{"e1", "e2", "a"};
  return v;
}

struct NekrasovParams {
  int rank = 2;
  int order = 3;
  int workers = 1;

  NekrasovParams() = default;
  NekrasovParams(int r, int n, int w = 1) : rank(r), order(n), workers(w) {
    if (r != 1 && r != 2) fail(errc::invalid_argument, "rank must be 1 or 2");
    if (n < 0) fail(errc::invalid_argument, "order must be non-negative");
  }
};

struct FixedPointTuple {
  std::vector<Partition> partitions;
  int size() const {
    int k = 0;
    for (const auto& p : partitions) k += p.size();
    return k;
  }
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < partitions.size(); ++i) s += (i ? "," : "") + partitions[i].to_string();
    return s + "]";
  }
};

/// r-tuples of partitions of total size k, ordered by the size of the first
/// slot (descending), then by the partition order within each slot.
inline std::vector<FixedPointTuple> fixed_points(int r, int k) {
  if (r < 1) fail(errc::invalid_argument, "rank must be positive");
  if (k < 0) fail(errc::invalid_argument, "k must be non-negative");
  std::vector<FixedPointTuple> out;
  std::vector<Partition> cur;
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == r - 1) {
      for (const auto& p : partitions_of(remaining)) {
        cur.push_back(p);
        out.push_back({cur});
        cur.pop_back();
      }
      return;
    }
    for (int j = remaining; j >= 0; --j)
      for (const auto& p : partitions_of(j)) {
        cur.push_back(p);
        self(self, slot + 1, remaining - j);
        cur.pop_back();
      }
  };
  rec(rec, 0, k);
  return out;
}

/// Linear form c_e1 e1 + c_e2 e2 + c_a a.
struct LinearWeight {
  int e1 = 0, e2 = 0, a = 0;
  bool is_zero() const { return e1 == 0 && e2 == 0 && a == 0; }
  Polynomial polynomial() const {
    return Polynomial::variable(0) * e1 + Polynomial::variable(1) * e2 + Polynomial::variable(2) * a;
  }
  std::string to_string() const { return polynomial().to_string(nekrasov_vars()); }
  friend bool operator==(const LinearWeight&, const LinearWeight&) = default;
};

/// Arm/leg convention. For slots (alpha, beta) with offsets a_alpha:
///   s in lambda_alpha: a_beta - a_alpha - e1 leg_beta(s) + e2 (arm_alpha(s) + 1)
///   s in lambda_beta:  a_beta - a_alpha + e1 (leg_alpha(s) + 1) - e2 arm_beta(s)
inline std::vector<LinearWeight> tangent_weights(const FixedPointTuple& fp) {
  const int r = int(fp.partitions.size());
  if (r != 1 && r != 2) fail(errc::invalid_argument, "tangent weights need rank 1 or 2");
  auto offset = [r](int slot) { return r == 1 ? 0 : (slot == 0 ? 1 : -1); };
  std::vector<LinearWeight> w;
  for (int al = 0; al < r; ++al)
    for (int be = 0; be < r; ++be) {
      const Partition& la = fp.partitions[std::size_t(al)];
      const Partition& lb = fp.partitions[std::size_t(be)];
      const int da = offset(be) - offset(al);
      for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.row(i); ++j) w.push_back({-lb.leg(i, j), la.arm(i, j) + 1, da});
      for (int i = 0; i < lb.length(); ++i)
        for (int j = 0; j < lb.row(i); ++j) w.push_back({la.leg(i, j) + 1, -lb.arm(i, j), da});
    }
  for (const auto& x : w)
    if (x.is_zero()) fail(errc::zero_weight_at_generic_point, "fixed point " + fp.to_string() + " has an identically zero weight");
  return w;
}

inline RationalFunction fixed_point_contribution(const FixedPointTuple& fp) {
  std::vector<Polynomial> den;
  for (const auto& w : tangent_weights(fp)) den.push_back(w.polynomial());
  return RationalFunction::from_factors(nekrasov_vars(), Polynomial(1), den);
}

/// Coefficient of Lambda^k.
inline RationalFunction z_coefficient(int rank, int k, int workers = 1) {
  const auto fps = fixed_points(rank, k);
  std::vector<RationalFunction> terms(fps.size());
  parallel_for(fps.size(), workers, [&](std::size_t i) { terms[i] = fixed_point_contribution(fps[i]); });
  RationalFunction total = RationalFunction::sum(terms);
  if (total.vars().empty()) total = RationalFunction(nekrasov_vars(), total.numerator());
  return total;
}

inline TruncatedSeries<RationalFunction> z_series(const NekrasovParams& prm) {
  TruncatedSeries<RationalFunction> z("Lambda", prm.order);
  z[0] = RationalFunction(nekrasov_vars(), Polynomial(1));
  for (int k = 1; k <= prm.order; ++k) z[k] = z_coefficient(prm.rank, k, prm.workers);
  return z;
}

inline RationalFunction e1e2() { return RationalFunction(nekrasov_vars(), Polynomial::variable(0) * Polynomial::variable(1)); }

/// exp(Lambda / (e1 e2)) truncated; the rank-1 closed form.
inline TruncatedSeries<RationalFunction> rank1_closed_form(int order) {
  TruncatedSeries<RationalFunction> s("Lambda", order);
  s[0] = RationalFunction(nekrasov_vars(), Polynomial(0));
  if (order >= 1) s[1] = e1e2().inverse();
  return series_exp(s);
}

inline TruncatedSeries<RationalFunction> prepotential_from(const TruncatedSeries<RationalFunction>& z) {
  auto f = series_log(z);
  const RationalFunction p = e1e2();
  for (int k = 0; k <= f.order(); ++k) f[k] = p * f[k];
  return f;
}

inline TruncatedSeries<RationalFunction> prepotential(const NekrasovParams& prm) { return prepotential_from(z_series(prm)); }

/// Limit e -> 0 of f(e1 = e, e2 = slope * e, a); PolePersists if a pole in e survives.
inline RationalFunction epsilon_limit(const RationalFunction& f, const Rational& slope = 1) {
  if (f.is_zero()) return f;
  const RationalFunction g = f.substitute(1, Polynomial::variable(0) * slope);
  const Polynomial num = g.numerator();
  const Polynomial den = g.denominator();
  const int n = num.order_in(0), d = den.order_in(0);
  if (n < d)
    fail(errc::pole_persists, "pole of order " + std::to_string(d - n) + " in epsilon survives in " + f.to_string());
  if (n > d) return RationalFunction(nekrasov_vars(), Polynomial(0));
  return RationalFunction::from_factors(nekrasov_vars(), num.coefficient_in(0, n), {den.coefficient_in(0, d)});
}

struct PrepotentialLimits {
  std::vector<RationalFunction> limits;  // index k: limit of F_k
  bool direction_independent = true;     // same value along e2 = e1 and e2 = -3 e1
};

inline PrepotentialLimits prepotential_limits(const TruncatedSeries<RationalFunction>& f) {
  PrepotentialLimits out;
  for (int k = 0; k <= f.order(); ++k) {
    out.limits.push_back(epsilon_limit(f[k]));
    if (!(epsilon_limit(f[k], Rational(-3)) == out.limits.back())) out.direction_independent = false;
  }
  return out;
}

inline RationalFunction swap_epsilons(const RationalFunction& f) { return f.permuted({1, 0, 2, 3}); }

inline RationalFunction negate_a(const RationalFunction& f) { return f.substitute(2, Polynomial::variable(2) * -1); }

struct SymmetryReport {
  bool epsilon_swap = true;
  bool a_reflection = true;
  std::vector<int> failing_orders;
};

inline SymmetryReport check_symmetries(const TruncatedSeries<RationalFunction>& z) {
  SymmetryReport r;
  for (int k = 0; k <= z.order(); ++k) {
    const bool s = swap_epsilons(z[k]) == z[k];
    const bool t = negate_a(z[k]) == z[k];
    r.epsilon_swap = r.epsilon_swap && s;
    r.a_reflection = r.a_reflection && t;
    if (!s || !t) r.failing_orders.push_back(k);
  }
  return r;
}

using cplx = std::complex<double>;

struct SwPeriod {
  cplx value;      // with `samples` nodes
  cplx refined;    // with 2 * samples nodes
  double delta = 0;
  int samples = 0;
  double max_curve_residual = 0;  // max |z^2 - (Lambda(w + 1/w) - u)|
};

namespace detail {
inline cplx sw_contour_mean(cplx u, double lambda, int samples, double& residual) {
  cplx prev = std::sqrt(cplx(2 * lambda) - u);
  cplx sum = 0;
  for (int j = 0; j < samples; ++j) {
    const cplx w = std::polar(1.0, 2 * std::numbers::pi * j / samples);
    const cplx rhs = lambda * (w + 1.0 / w) - u;
    cplx z = std::sqrt(rhs);
    if (std::abs(z - prev) > std::abs(z + prev)) z = -z;
    residual = std::max(residual, std::abs(z * z - rhs));
    sum += z;
    prev = z;
  }
  // Branch must close up after a full turn.
  if (std::abs(prev - std::sqrt(cplx(2 * lambda) - u)) > std::abs(prev + std::sqrt(cplx(2 * lambda) - u)))
    fail(errc::branch_collision, "square-root branch does not close around the contour");
  return sum / double(samples);
}
}  // namespace detail

/// a(u, Lambda) = (1/2 pi i) \oint_{|w|=1} z dw/w, z^2 = Lambda(w + 1/w) - u, with
/// the branch fixed by the principal root at w = 1 and continued along the circle.
inline SwPeriod sw_periods(cplx u, double lambda, int samples = 256) {
  if (!(lambda > 0)) fail(errc::invalid_argument, "Lambda must be positive");
  if (samples < 8) fail(errc::invalid_argument, "at least 8 samples");
  // Branch points: Lambda w^2 - u w + Lambda = 0, plus w = 0.
  const cplx disc = std::sqrt(u * u - 4 * lambda * lambda);
  for (cplx root : {(u + disc) / (2 * lambda), (u - disc) / (2 * lambda)})
    if (std::abs(std::abs(root) - 1) < 1e-6) fail(errc::branch_collision, "branch point within 1e-6 of the unit circle");
  SwPeriod p;
  p.samples = samples;
  p.value = detail::sw_contour_mean(u, lambda, samples, p.max_curve_residual);
  p.refined = detail::sw_contour_mean(u, lambda, 2 * samples, p.max_curve_residual);
  p.delta = std::abs(p.value - p.refined);
  return p;
}

inline json to_json(const FixedPointTuple& fp) {
  json a = json::array();
  for (const auto& p : fp.partitions) a.push_back(to_json(p));
  return a;
}

}  // namespace gaugekit
