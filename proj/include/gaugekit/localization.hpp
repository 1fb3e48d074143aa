#pragma once

// Fixed-point localization for circle and torus actions.
//
// Conventions (fixed by the sphere check): a fixed point p with moment value
// H(p) and tangent weights w_1..w_m has Euler class e(p) = prod w_i, the
// maximum of H carries negative weights, and the equivariant symplectic class
// restricts to -tau H(p). The symplectic volume is normalized so that the
// pushforward of the Liouville measure under a torus moment map is Lebesgue
// measure on the moment polytope (S^2 has volume 2, CP^2 volume 1/2).

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gaugekit/algebra/json.hpp"
#include "gaugekit/algebra/ratfun.hpp"
#include "gaugekit/errors.hpp"
#include "gaugekit/numerics/parallel.hpp"

namespace gaugekit {

using cplx = std::complex<double>;

inline const RationalFunction::Vars& tau_vars() {
  static const RationalFunction::Vars v{"tau"};
  return v;
}
inline Polynomial tau_poly(int power = 1, const Rational& c = 1) { return Polynomial::variable(0, power) * c; }

struct FixedPointDatum {
  std::string label;
  Rational moment_value = 0;
  std::vector<long> weights;
  std::map<std::string, RationalFunction> restrictions;

  Rational euler_weight() const {
    Rational e = 1;
    for (long w : weights) e *= w;
    return e;
  }
};

/// Deterministic quadrature and Monte-Carlo access to the Liouville measure.
struct NumericSampler {
  double volume = 0;
  /// Integral of f(H) against the Liouville measure.
  std::function<cplx(const std::function<cplx(double)>&)> integrate_h;
  /// One draw from the normalized Liouville measure: writes the torus moment
  /// vector and returns the circle Hamiltonian.
  std::function<double(std::mt19937_64&, std::vector<double>&)> draw;
  int moment_dim = 1;
  std::vector<std::vector<double>> vertex_images;
};

struct ManifoldModel {
  std::string name;
  int m = 1;  // complex dimension; real dimension 2m
  bool compact = true;
  std::vector<FixedPointDatum> fixed_points;
  std::optional<NumericSampler> sampler;

  void validate() const {
    if (m < 1) fail(errc::invalid_argument, "model dimension must be positive");
    for (const auto& p : fixed_points) {
      if (int(p.weights.size()) != m) fail(errc::invalid_argument, "fixed point '" + p.label + "' has the wrong number of weights");
      for (long w : p.weights)
        if (w == 0) fail(errc::zero_weight, "fixed point '" + p.label + "' has a zero weight");
    }
  }
  double h_min() const {
    double v = INFINITY;
    for (const auto& p : fixed_points) v = std::min(v, p.moment_value.convert_to<double>());
    return v;
  }
  double h_max() const {
    double v = -INFINITY;
    for (const auto& p : fixed_points) v = std::max(v, p.moment_value.convert_to<double>());
    return v;
  }
};

namespace detail {

/// Composite 30-point Gauss-Legendre on [a, b].
template <typename F>
auto composite_gauss(F&& f, double a, double b, int panels) {
  using R = decltype(f(a));
  R total{};
  const double w = (b - a) / panels;
  for (int i = 0; i < panels; ++i) total += boost::math::quadrature::gauss<double, 30>::integrate(f, a + i * w, a + (i + 1) * w);
  return total;
}

inline std::vector<std::string> standard_class_names() { return {"1", "omega", "omega^2", "omega^3", "euler", "c1", "c1^2"}; }

/// Restrictions of the catalog classes at a point with moment h and weights w.
inline std::map<std::string, RationalFunction> standard_restrictions(const Rational& h, const std::vector<long>& w) {
  const auto& v = tau_vars();
  Rational e = 1, c1 = 0;
  for (long x : w) {
    e *= x;
    c1 += x;
  }
  const Polynomial om = tau_poly(1, -h);
  return {{"1", RationalFunction(v, Polynomial(1))},
          {"omega", RationalFunction(v, om)},
          {"omega^2", RationalFunction(v, om.pow(2))},
          {"omega^3", RationalFunction(v, om.pow(3))},
          {"euler", RationalFunction(v, tau_poly(int(w.size()), e))},
          {"c1", RationalFunction(v, tau_poly(1, c1))},
          {"c1^2", RationalFunction(v, tau_poly(2, c1 * c1))}};
}

inline FixedPointDatum make_fixed_point(std::string label, const Rational& h, std::vector<long> w) {
  FixedPointDatum p;
  p.label = std::move(label);
  p.moment_value = h;
  p.restrictions = standard_restrictions(h, w);
  p.weights = std::move(w);
  return p;
}

inline void gaussian_unit(std::mt19937_64& rng, double* out, int n) {
  std::normal_distribution<double> nd;
  double s = 0;
  for (int i = 0; i < n; ++i) {
    out[i] = nd(rng);
    s += out[i] * out[i];
  }
  s = std::sqrt(s);
  for (int i = 0; i < n; ++i) out[i] /= s;
}

}  // namespace detail

/// Round S^2 with H = height in [-1, 1], rotation about the vertical axis.
inline ManifoldModel sphere_model(double shift = 0) {
  ManifoldModel s;
  s.name = shift == 0 ? "s2" : "s2_shifted";
  s.m = 1;
  const Rational sh(shift);
  s.fixed_points = {detail::make_fixed_point("N", 1 + sh, {-1}), detail::make_fixed_point("S", -1 + sh, {1})};
  NumericSampler ns;
  ns.volume = 2;
  // (theta, phi) coordinates: Liouville density sin(theta) / (2 pi); phi integrates out.
  ns.integrate_h = [shift](const std::function<cplx(double)>& f) {
    return detail::composite_gauss([&](double th) { return f(std::cos(th) + shift) * std::sin(th); }, 0.0, std::numbers::pi, 16);
  };
  ns.draw = [shift](std::mt19937_64& rng, std::vector<double>& mom) {
    double x[3];
    detail::gaussian_unit(rng, x, 3);
    mom.assign(1, x[2] + shift);
    return x[2] + shift;
  };
  ns.moment_dim = 1;
  ns.vertex_images = {{1 + shift}, {-1 + shift}};
  s.sampler = ns;
  return s;
}

/// CP^2 with the standard T^2 and the circle of weights (w0, w1, w2):
/// H = sum w_i |Z_i|^2 / |Z|^2, tangent weights w_j - w_i at e_i.
inline ManifoldModel cp2_model(std::array<long, 3> w = {0, 1, 3}) {
  if (w[0] == w[1] || w[1] == w[2] || w[0] == w[2]) fail(errc::zero_weight, "circle weights must be distinct for isolated fixed points");
  ManifoldModel s;
  s.name = "cp2";
  s.m = 2;
  for (int i = 0; i < 3; ++i) {
    std::vector<long> tw;
    for (int j = 0; j < 3; ++j)
      if (j != i) tw.push_back(w[std::size_t(j)] - w[std::size_t(i)]);
    s.fixed_points.push_back(detail::make_fixed_point("p" + std::to_string(i), Rational(w[std::size_t(i)]), tw));
  }
  NumericSampler ns;
  ns.volume = 0.5;
  // |Z0| = cos(a), |Z1| = sin(a) cos(b), |Z2| = sin(a) sin(b) on the unit
  // sphere in C^3; after the torus angles the Fubini-Study density is
  // 4 sin^3(a) cos(a) sin(b) cos(b) on [0, pi/2]^2.
  ns.integrate_h = [w](const std::function<cplx(double)>& f) {
    auto inner = [&](double a) {
      const double ca = std::cos(a), sa = std::sin(a);
      return detail::composite_gauss(
          [&](double b) {
            const double cb = std::cos(b), sb = std::sin(b);
            const double h = double(w[0]) * ca * ca + sa * sa * (double(w[1]) * cb * cb + double(w[2]) * sb * sb);
            return f(h) * (4 * sa * sa * sa * ca * sb * cb);
          },
          0.0, std::numbers::pi / 2, 4);
    };
    return detail::composite_gauss(inner, 0.0, std::numbers::pi / 2, 4);
  };
  ns.draw = [w](std::mt19937_64& rng, std::vector<double>& mom) {
    double x[6];
    detail::gaussian_unit(rng, x, 6);
    const double m0 = x[0] * x[0] + x[1] * x[1], m1 = x[2] * x[2] + x[3] * x[3], m2 = x[4] * x[4] + x[5] * x[5];
    mom.assign({m1, m2});
    return double(w[0]) * m0 + double(w[1]) * m1 + double(w[2]) * m2;
  };
  ns.moment_dim = 2;
  ns.vertex_images = {{0, 0}, {1, 0}, {0, 1}};
  s.sampler = ns;
  return s;
}

/// Two spheres, the second with H shifted by `shift`.
inline ManifoldModel sphere_pair_model(double shift = 3) {
  const ManifoldModel a = sphere_model(0), b = sphere_model(shift);
  ManifoldModel s;
  s.name = "s2_pair";
  s.m = 1;
  s.fixed_points = a.fixed_points;
  for (auto p : b.fixed_points) {
    p.label += "'";
    s.fixed_points.push_back(p);
  }
  NumericSampler ns;
  ns.volume = 4;
  ns.integrate_h = [sa = *a.sampler, sb = *b.sampler](const std::function<cplx(double)>& f) { return sa.integrate_h(f) + sb.integrate_h(f); };
  ns.draw = [sa = *a.sampler, sb = *b.sampler](std::mt19937_64& rng, std::vector<double>& mom) {
    std::uniform_int_distribution<int> coin(0, 1);
    return coin(rng) ? sa.draw(rng, mom) : sb.draw(rng, mom);
  };
  ns.moment_dim = 1;
  ns.vertex_images = {{-1}, {1 + shift}};
  s.sampler = ns;
  return s;
}

/// Sphere whose restriction of the class "1" is 1 at N and 0 at S.
inline ManifoldModel corrupted_sphere_model() {
  ManifoldModel s = sphere_model();
  s.name = "s2_corrupted";
  s.fixed_points[1].restrictions["1"] = RationalFunction(tau_vars(), Polynomial(0));
  return s;
}

/// Same model with the sampler's H (and first moment coordinate) raised by 2
/// on the patch where that coordinate is below lo + 0.1 (lo = smallest vertex image).
inline ManifoldModel corrupt_sampler(ManifoldModel model) {
  if (!model.sampler) fail(errc::no_sampler, "model '" + model.name + "' has no sampler");
  auto inner = model.sampler->draw;
  double lo = INFINITY;
  for (const auto& v : model.sampler->vertex_images) lo = std::min(lo, v[0]);
  model.sampler->draw = [inner, lo](std::mt19937_64& rng, std::vector<double>& mom) {
    double h = inner(rng, mom);
    if (mom[0] < lo + 0.1) {
      mom[0] += 2;
      h += 2;
    }
    return h;
  };
  model.name += "_corrupted_sampler";
  return model;
}

inline ManifoldModel model_by_name(const std::string& name) {
  if (name == "s2") return sphere_model();
  if (name == "cp2") return cp2_model();
  if (name == "s2_pair") return sphere_pair_model();
  if (name == "s2_corrupted") return corrupted_sphere_model();
  fail(errc::invalid_argument, "unknown model '" + name + "' (s2, cp2, s2_pair, s2_corrupted)");
}

/// sum_p e^{-itH(p)} / (e(p) (it)^m).
inline cplx dh_rhs(const ManifoldModel& model, double t) {
  model.validate();
  if (!model.compact) fail(errc::invalid_argument, "the fixed-point formula needs a compact model");
  if (t == 0) fail(errc::invalid_argument, "t must be nonzero");
  const cplx it(0, t);
  cplx sum = 0;
  for (const auto& p : model.fixed_points) {
    const double h = p.moment_value.convert_to<double>();
    sum += std::exp(-it * h) / (p.euler_weight().convert_to<double>() * std::pow(it, model.m));
  }
  return sum;
}

/// int_V e^{-itH} omega^m / m! by the model's quadrature.
inline cplx dh_lhs_numeric(const ManifoldModel& model, double t) {
  if (!model.sampler) fail(errc::no_sampler, "model '" + model.name + "' has no sampler");
  return model.sampler->integrate_h([t](double h) { return std::exp(cplx(0, -t * h)); });
}

/// sum_p i_p^*(alpha) / prod(w_i tau), required to be a polynomial in tau.
inline RationalFunction ab_integral(const ManifoldModel& model, const std::string& class_name) {
  model.validate();
  std::vector<RationalFunction> terms;
  for (const auto& p : model.fixed_points) {
    auto it = p.restrictions.find(class_name);
    if (it == p.restrictions.end()) fail(errc::invalid_argument, "fixed point '" + p.label + "' has no restriction for class '" + class_name + "'");
    std::vector<Polynomial> den;
    for (long w : p.weights) den.push_back(tau_poly(1, Rational(w)));
    terms.push_back(it->second * RationalFunction::from_factors(tau_vars(), Polynomial(1), den));
  }
  RationalFunction total = RationalFunction::sum(terms);
  if (!total.is_polynomial()) fail(errc::not_polynomial, "class '" + class_name + "' integrates to " + total.to_string());
  return total;
}

/// sum_p prod_i 1/(w_i tau).
inline RationalFunction formal_integral(const std::vector<std::vector<long>>& weight_lists) {
  std::vector<RationalFunction> terms;
  for (const auto& ws : weight_lists) {
    if (ws.empty()) fail(errc::invalid_argument, "empty weight list");
    std::vector<Polynomial> den;
    for (long w : ws) {
      if (w == 0) fail(errc::zero_weight, "zero weight");
      den.push_back(tau_poly(1, Rational(w)));
    }
    terms.push_back(RationalFunction::from_factors(tau_vars(), Polynomial(1), den));
  }
  return RationalFunction::sum(terms);
}

struct BoundaryCheck {
  RationalFunction lhs, rhs;
  Rational pairing = 0;  // <c1^{m-1}, [CP^{m-1}]>
  bool equal = false;
};

/// C^m with the weight-one circle: formal integral against tau^{-m} times the
/// hyperplane pairing on the boundary quotient CP^{m-1}, itself computed by
/// localization with weights 0..m-1.
inline BoundaryCheck boundary_check_cm(int m) {
  if (m < 1) fail(errc::invalid_argument, "m must be positive");
  BoundaryCheck b;
  b.lhs = formal_integral({std::vector<long>(std::size_t(m), 1)});
  Rational pairing = 0;
  for (int i = 0; i < m; ++i) {
    Rational num = 1, den = 1;
    for (int k = 0; k < m - 1; ++k) num *= -i;
    for (int j = 0; j < m; ++j)
      if (j != i) den *= (j - i);
    pairing += num / den;
  }
  b.pairing = pairing;
  b.rhs = RationalFunction::from_factors(tau_vars(), Polynomial(pairing), {tau_poly(m)});
  b.equal = b.lhs == b.rhs;
  return b;
}

namespace detail {
constexpr int kMonteCarloChunks = 64;

/// Runs draw-consumers over fixed chunks, each with its own seeded stream.
template <typename PerChunk>
void monte_carlo_chunks(std::uint64_t seed, long samples, int workers, PerChunk&& per_chunk) {
  parallel_for(kMonteCarloChunks, workers, [&](std::size_t c) {
    std::seed_seq seq{std::uint64_t(seed & 0xffffffffu), std::uint64_t(seed >> 32), std::uint64_t(c)};
    std::mt19937_64 rng(seq);
    const long base = samples / kMonteCarloChunks, extra = samples % kMonteCarloChunks;
    per_chunk(c, rng, base + (long(c) < extra ? 1 : 0));
  });
}
}  // namespace detail

struct HullReport {
  bool inside = true;
  long samples = 0;
  long outside = 0;
  double worst_violation = 0;
};

/// Every sampled torus moment lies in the hull of the fixed-point images (slack 1e-9).
inline HullReport moment_hull_check(const ManifoldModel& model, long samples, std::uint64_t seed = 1, int workers = 1) {
  if (!model.sampler) fail(errc::no_sampler, "model '" + model.name + "' has no sampler");
  const auto& ns = *model.sampler;
  // Half-planes a.x <= b describing the hull.
  std::vector<std::pair<std::vector<double>, double>> faces;
  if (ns.moment_dim == 1) {
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& v : ns.vertex_images) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    faces = {{{1.0}, hi}, {{-1.0}, -lo}};
  } else if (ns.moment_dim == 2) {
    auto pts = ns.vertex_images;
    std::sort(pts.begin(), pts.end());
    std::vector<std::vector<double>> hull;
    auto cross = [](const std::vector<double>& o, const std::vector<double>& a, const std::vector<double>& b) {
      return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    for (int pass = 0; pass < 2; ++pass) {
      const std::size_t start = hull.size();
      for (const auto& p : pts) {
        while (hull.size() >= start + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
      }
      hull.pop_back();
      std::reverse(pts.begin(), pts.end());
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto& a = hull[i];
      const auto& b = hull[(i + 1) % hull.size()];
      // Counter-clockwise hull: interior lies to the left of a->b.
      const std::vector<double> n{b[1] - a[1], a[0] - b[0]};
      const double len = std::hypot(n[0], n[1]);
      faces.push_back({{n[0] / len, n[1] / len}, (n[0] * a[0] + n[1] * a[1]) / len});
    }
  } else {
    fail(errc::invalid_argument, "hull check supports moment maps into R^1 and R^2");
  }
  std::vector<long> outside(detail::kMonteCarloChunks, 0);
  std::vector<double> worst(detail::kMonteCarloChunks, 0);
  detail::monte_carlo_chunks(seed, samples, workers, [&](std::size_t c, std::mt19937_64& rng, long n) {
    std::vector<double> mom;
    for (long s = 0; s < n; ++s) {
      ns.draw(rng, mom);
      double v = 0;
      for (const auto& [a, b] : faces) {
        double dot = 0;
        for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * mom[i];
        v = std::max(v, dot - b);
      }
      if (v > 1e-9) ++outside[c];
      worst[c] = std::max(worst[c], v);
    }
  });
  HullReport r;
  r.samples = samples;
  for (int c = 0; c < detail::kMonteCarloChunks; ++c) {
    r.outside += outside[std::size_t(c)];
    r.worst_violation = std::max(r.worst_violation, worst[std::size_t(c)]);
  }
  r.inside = r.outside == 0;
  return r;
}

struct DensityPiece {
  double lo = 0, hi = 0;
  std::vector<double> coefficients;  // density = sum c_k H^k
};

struct PushforwardDensity {
  double lo = 0, hi = 0;
  int bins = 0;
  long samples = 0;
  std::vector<double> histogram;  // Liouville mass per bin
  std::vector<double> breakpoints;
  std::vector<DensityPiece> pieces;
  int degree = 0;
  double residual = 0;  // max |fit - histogram| over fitted bins / mean bin mass
  int fitted_bins = 0;
};

/// Histogram of H under the Liouville measure plus a least-squares polynomial
/// of degree m - 1 on each interval between consecutive critical values. Bins
/// that straddle a critical value are left out of the fit.
inline PushforwardDensity pushforward_density(const ManifoldModel& model, int bins, long samples, std::uint64_t seed = 1, int workers = 1) {
  if (!model.sampler) fail(errc::no_sampler, "model '" + model.name + "' has no sampler");
  if (bins < 1 || samples < 1) fail(errc::invalid_argument, "bins and samples must be positive");
  const auto& ns = *model.sampler;
  PushforwardDensity d;
  d.lo = model.h_min();
  d.hi = model.h_max();
  d.bins = bins;
  d.samples = samples;
  d.degree = model.m - 1;
  const double width = (d.hi - d.lo) / bins;
  std::vector<std::vector<long>> counts(detail::kMonteCarloChunks, std::vector<long>(std::size_t(bins), 0));
  detail::monte_carlo_chunks(seed, samples, workers, [&](std::size_t c, std::mt19937_64& rng, long n) {
    std::vector<double> mom;
    for (long s = 0; s < n; ++s) {
      const double h = ns.draw(rng, mom);
      int b = int(std::floor((h - d.lo) / width));
      b = std::clamp(b, 0, bins - 1);
      ++counts[c][std::size_t(b)];
    }
  });
  d.histogram.assign(std::size_t(bins), 0);
  for (int b = 0; b < bins; ++b) {
    long total = 0;
    for (int c = 0; c < detail::kMonteCarloChunks; ++c) total += counts[std::size_t(c)][std::size_t(b)];
    d.histogram[std::size_t(b)] = ns.volume * double(total) / double(samples);
  }
  for (const auto& p : model.fixed_points) d.breakpoints.push_back(p.moment_value.convert_to<double>());
  std::sort(d.breakpoints.begin(), d.breakpoints.end());
  d.breakpoints.erase(std::unique(d.breakpoints.begin(), d.breakpoints.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                      d.breakpoints.end());
  const double mean_mass = ns.volume / bins;
  for (std::size_t k = 0; k + 1 < d.breakpoints.size(); ++k) {
    DensityPiece piece;
    piece.lo = d.breakpoints[k];
    piece.hi = d.breakpoints[k + 1];
    std::vector<int> members;
    for (int b = 0; b < bins; ++b) {
      const double a = d.lo + b * width, e = a + width;
      if (a >= piece.lo - 1e-9 * width && e <= piece.hi + 1e-9 * width) members.push_back(b);
    }
    const int ncoef = d.degree + 1;
    if (int(members.size()) < ncoef) {
      piece.coefficients.assign(std::size_t(ncoef), 0.0);
      d.pieces.push_back(piece);
      continue;
    }
    // Bin mass of sum c_k H^k is sum c_k (e^{k+1} - a^{k+1}) / (k+1).
    Eigen::MatrixXd a(members.size(), ncoef);
    Eigen::VectorXd y(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      const double lo = d.lo + members[i] * width, hi = lo + width;
      for (int k = 0; k < ncoef; ++k) a(Eigen::Index(i), k) = (std::pow(hi, k + 1) - std::pow(lo, k + 1)) / (k + 1);
      y(Eigen::Index(i)) = d.histogram[std::size_t(members[i])];
    }
    const Eigen::VectorXd c = a.colPivHouseholderQr().solve(y);
    piece.coefficients.assign(c.data(), c.data() + c.size());
    const Eigen::VectorXd fit = a * c;
    for (std::size_t i = 0; i < members.size(); ++i)
      d.residual = std::max(d.residual, std::abs(fit(Eigen::Index(i)) - y(Eigen::Index(i))) / mean_mass);
    d.fitted_bins += int(members.size());
    d.pieces.push_back(piece);
  }
  return d;
}

inline json to_json(const FixedPointDatum& p) {
  json r = json::object();
  for (const auto& [k, v] : p.restrictions) {
    if (!v.is_polynomial()) {
      r[k] = v.to_string();
      continue;
    }
    json terms = json::object();
    for (const auto& [mono, c] : v.numerator().terms()) terms[std::to_string(mono.exp[0])] = to_string(c);
    r[k] = terms;
  }
  return json{{"label", p.label}, {"moment", to_string(p.moment_value)}, {"weights", p.weights}, {"restrictions", r}};
}

inline json to_json(const ManifoldModel& m) {
  json pts = json::array();
  for (const auto& p : m.fixed_points) pts.push_back(to_json(p));
  return json{{"name", m.name}, {"dimension", m.m}, {"compact", m.compact}, {"fixed_points", pts}};
}

/// Reads a fixed-point model: restrictions are polynomials in tau given as
/// {"exponent": "num/den"} objects.
inline ManifoldModel model_from_json(const json& j) {
  ManifoldModel m;
  m.name = j.value("name", std::string("custom"));
  m.m = j.at("dimension").get<int>();
  m.compact = j.value("compact", true);
  for (const auto& jp : j.at("fixed_points")) {
    FixedPointDatum p;
    p.label = jp.value("label", std::string("p") + std::to_string(m.fixed_points.size()));
    const auto& mv = jp.at("moment");
    p.moment_value = mv.is_string() ? parse_rational(mv.get<std::string>()) : Rational(mv.get<long>());
    p.weights = jp.at("weights").get<std::vector<long>>();
    if (jp.contains("restrictions"))
      for (const auto& [cls, terms] : jp.at("restrictions").items()) {
        Polynomial poly;
        for (const auto& [e, c] : terms.items()) {
          const Rational q = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
          poly += tau_poly(std::stoi(e), q);
        }
        p.restrictions[cls] = RationalFunction(tau_vars(), poly);
      }
    m.fixed_points.push_back(std::move(p));
  }
  m.validate();
  return m;
}

}  // namespace gaugekit
