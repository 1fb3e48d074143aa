#pragma once

// ADHM data, the pointwise operator whose kernel is the instanton fiber, and
// gauge-invariant diagnostics of the resulting connection.
//
// Operator layout at x in R^4, with z1 = x1 + i x2, z2 = x3 + i x4, acting on
// C^k (+) C^k (+) C^r:
//
//   D(x) = [ -(a2 - z2)    a1 - z1     P  ]   (k rows)
//          [ (a1 - z1)^*  (a2 - z2)^*  Q^* ]   (k rows)
//
// The first block row composed with the adjoint of the second is the complex
// ADHM expression, so the fiber ker D(x) has dimension r away from
// degenerations. With this orientation the curvature is anti-self-dual.

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "gaugekit/errors.hpp"
#include "gaugekit/numerics/grid.hpp"
#include "gaugekit/numerics/matrix.hpp"
#include "gaugekit/numerics/parallel.hpp"

namespace gaugekit {

struct AdhmData {
  int k = 1;
  int r = 2;
  ComplexMatrix alpha1, alpha2;  // k x k
  ComplexMatrix p_map;           // k x r
  ComplexMatrix q_map;           // r x k
  double deformation = 0;

  AdhmData() = default;
  AdhmData(ComplexMatrix a1, ComplexMatrix a2, ComplexMatrix p, ComplexMatrix q, double eps = 0)
      : k(int(a1.rows())), r(int(p.cols())), alpha1(std::move(a1)), alpha2(std::move(a2)), p_map(std::move(p)), q_map(std::move(q)), deformation(eps) {
    validate();
  }
  static AdhmData zero(int k, int r) {
    return AdhmData(ComplexMatrix::Zero(k, k), ComplexMatrix::Zero(k, k), ComplexMatrix::Zero(k, r), ComplexMatrix::Zero(r, k));
  }

  void validate() const {
    if (k < 1 || r < 1) fail(errc::invalid_argument, "ADHM data needs k >= 1 and r >= 1");
    auto shape = [](const ComplexMatrix& m, int rows, int cols, const char* what) {
      if (m.rows() != rows || m.cols() != cols)
        fail(errc::invalid_argument, std::string(what) + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                                         std::to_string(rows) + "x" + std::to_string(cols));
    };
    shape(alpha1, k, k, "alpha1");
    shape(alpha2, k, k, "alpha2");
    shape(p_map, k, r, "P");
    shape(q_map, r, k, "Q");
  }
};

struct AdhmResiduals {
  double complex_residual = 0;
  double real_residual = 0;
};

inline AdhmResiduals adhm_residuals(const AdhmData& d) {
  const ComplexMatrix& a1 = d.alpha1;
  const ComplexMatrix& a2 = d.alpha2;
  const ComplexMatrix c = a1 * a2 - a2 * a1 + d.p_map * d.q_map;
  const ComplexMatrix re = a1 * a1.adjoint() - a1.adjoint() * a1 + a2 * a2.adjoint() - a2.adjoint() * a2 + d.p_map * d.p_map.adjoint() -
                           d.q_map.adjoint() * d.q_map - d.deformation * ComplexMatrix::Identity(d.k, d.k);
  return {c.norm(), re.norm()};
}

/// U(k) action: alpha -> u alpha u^*, P -> u P, Q -> Q u^*.
inline AdhmData act_unitary(const AdhmData& d, const ComplexMatrix& u) {
  return AdhmData(u * d.alpha1 * u.adjoint(), u * d.alpha2 * u.adjoint(), u * d.p_map, d.q_map * u.adjoint(), d.deformation);
}

/// Diagonal t'Hooft datum: alpha1 = Diag(lambda), alpha2 = Diag(mu), P row i =
/// (rho_i, 0), Q column i = (0, rho_i)^T.
inline AdhmData thooft_data(const std::vector<std::array<cplx, 2>>& centers, const std::vector<double>& scales) {
  const int k = int(centers.size());
  if (k == 0) fail(errc::invalid_argument, "need at least one center");
  if (scales.size() != centers.size()) fail(errc::invalid_argument, "one scale per center");
  for (int i = 0; i < k; ++i) {
    if (!(scales[std::size_t(i)] > 0)) fail(errc::invalid_argument, "scales must be positive");
    for (int j = 0; j < i; ++j)
      if (centers[std::size_t(i)] == centers[std::size_t(j)])
        fail(errc::duplicate_centers, "centers " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  AdhmData d = AdhmData::zero(k, 2);
  for (int i = 0; i < k; ++i) {
    d.alpha1(i, i) = centers[std::size_t(i)][0];
    d.alpha2(i, i) = centers[std::size_t(i)][1];
    d.p_map(i, 0) = scales[std::size_t(i)];
    d.q_map(1, i) = scales[std::size_t(i)];
  }
  return d;
}

/// Center of R^4 for a pair (lambda, mu) in C^2.
inline std::array<cplx, 2> center_from_point(const Point4& x) { return {cplx(x[0], x[1]), cplx(x[2], x[3])}; }

inline ComplexMatrix adhm_operator(const AdhmData& d, const Point4& x) {
  const int k = d.k, r = d.r;
  const cplx z1(x[0], x[1]), z2(x[2], x[3]);
  const ComplexMatrix id = ComplexMatrix::Identity(k, k);
  const ComplexMatrix b1 = d.alpha1 - z1 * id;
  const ComplexMatrix b2 = d.alpha2 - z2 * id;
  ComplexMatrix m(2 * k, 2 * k + r);
  m.block(0, 0, k, k) = -b2;
  m.block(0, k, k, k) = b1;
  m.block(0, 2 * k, k, r) = d.p_map;
  m.block(k, 0, k, k) = b1.adjoint();
  m.block(k, k, k, k) = b2.adjoint();
  m.block(k, 2 * k, k, r) = d.q_map.adjoint();
  return m;
}

/// Orthonormal fiber frame at x; KernelDimensionMismatch if the kernel is not r-dimensional.
inline ComplexMatrix fiber_frame(const AdhmData& d, const Point4& x, double tol = kDefaultKernelTol) {
  ComplexMatrix v = kernel_frame(adhm_operator(d, x), tol);
  if (v.cols() != d.r)
    fail(errc::kernel_dimension_mismatch, "fiber dimension " + std::to_string(v.cols()) + " != r = " + std::to_string(d.r) + " at x = (" +
                                              std::to_string(x[0]) + ", " + std::to_string(x[1]) + ", " + std::to_string(x[2]) + ", " +
                                              std::to_string(x[3]) + ")");
  return v;
}

/// Orthogonal projector onto ker D(x) from 1 - D^*(DD^*)^{-1}D, falling back to the SVD frame.
inline ComplexMatrix fiber_projector(const AdhmData& d, const Point4& x, double tol = kDefaultKernelTol) {
  const ComplexMatrix m = adhm_operator(d, x);
  const ComplexMatrix gram = m * m.adjoint();
  Eigen::LLT<ComplexMatrix> llt(gram);
  if (llt.info() == Eigen::Success) {
    // Reject near-singular Gram matrices; the SVD path reports them properly.
    const double diag_min = llt.matrixLLT().diagonal().real().minCoeff();
    const double scale = std::sqrt(gram.diagonal().real().maxCoeff());
    if (diag_min > 1e3 * tol * scale) {
      const auto n = m.cols();
      return ComplexMatrix::Identity(n, n) - m.adjoint() * llt.solve(m);
    }
  }
  const ComplexMatrix v = fiber_frame(d, x, tol);
  return v * v.adjoint();
}

/// P ref (ref^* P ref)^{-1/2}: the frame of the projected space closest to ref.
inline ComplexMatrix align_frame(const ComplexMatrix& projector, const ComplexMatrix& ref, double min_overlap = 1e-10) {
  const ComplexMatrix pr = projector * ref;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(ref.adjoint() * pr);
  if (es.eigenvalues().minCoeff() <= min_overlap) fail(errc::singular_gauge, "reference frame is orthogonal to the fiber");
  return pr * (es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint());
}

namespace detail {
/// Projection of ref onto ker D(x) without forming the full projector.
inline ComplexMatrix project_onto_fiber(const AdhmData& d, const Point4& x, const ComplexMatrix& ref, double tol = kDefaultKernelTol) {
  const ComplexMatrix m = adhm_operator(d, x);
  const ComplexMatrix gram = m * m.adjoint();
  Eigen::LLT<ComplexMatrix> llt(gram);
  if (llt.info() == Eigen::Success) {
    const double diag_min = llt.matrixLLT().diagonal().real().minCoeff();
    const double scale = std::sqrt(gram.diagonal().real().maxCoeff());
    if (diag_min > 1e3 * tol * scale) return ref - m.adjoint() * llt.solve(m * ref);
  }
  const ComplexMatrix v = fiber_frame(d, x, tol);
  return v * (v.adjoint() * ref);
}

/// Smooth orthonormal frame near ref: (P ref) L^{-*} with L L^* = ref^* P ref.
inline ComplexMatrix local_frame(const AdhmData& d, const Point4& x, const ComplexMatrix& ref) {
  const ComplexMatrix pr = project_onto_fiber(d, x, ref);
  Eigen::LLT<ComplexMatrix> llt(pr.adjoint() * pr);
  if (llt.info() != Eigen::Success) fail(errc::singular_gauge, "reference frame is orthogonal to the fiber");
  return llt.matrixU().solve<Eigen::OnTheRight>(pr);
}
}  // namespace detail

/// A connection at one point, carried with the fiber frame v and its
/// derivatives so that A_mu = v^* d_mu v and curvature can be rebuilt exactly.
struct GaugeSample {
  Point4 x{};
  std::array<ComplexMatrix, 4> a_components;
  ComplexMatrix frame;
  std::array<ComplexMatrix, 4> frame_derivatives;
};

/// F_{mu nu} for mu < nu in the order 12, 13, 14, 23, 24, 34.
struct CurvatureSample {
  Point4 x{};
  std::array<ComplexMatrix, 6> f_components;

  static constexpr std::array<std::array<int, 2>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  static int index(int mu, int nu) {
    for (int i = 0; i < 6; ++i)
      if (kPairs[std::size_t(i)][0] == mu && kPairs[std::size_t(i)][1] == nu) return i;
    fail(errc::invalid_argument, "curvature index pair must satisfy mu < nu");
  }
  /// F_{mu nu} with antisymmetry, 0-based indices.
  ComplexMatrix component(int mu, int nu) const {
    if (mu == nu) return ComplexMatrix::Zero(f_components[0].rows(), f_components[0].cols());
    return mu < nu ? f_components[std::size_t(index(mu, nu))] : ComplexMatrix(-f_components[std::size_t(index(nu, mu))]);
  }
};

inline GaugeSample make_gauge_sample(const Point4& x, ComplexMatrix v, std::array<ComplexMatrix, 4> dv) {
  GaugeSample s;
  s.x = x;
  for (std::size_t mu = 0; mu < 4; ++mu) s.a_components[mu] = v.adjoint() * dv[mu];
  s.frame = std::move(v);
  s.frame_derivatives = std::move(dv);
  return s;
}

/// F = dv^* (1 - v v^*) dv, the expansion of dA + A^A for A = v^* dv.
inline CurvatureSample curvature(const GaugeSample& s) {
  CurvatureSample c;
  c.x = s.x;
  std::array<ComplexMatrix, 4> perp;
  for (std::size_t mu = 0; mu < 4; ++mu) perp[mu] = s.frame_derivatives[mu] - s.frame * (s.frame.adjoint() * s.frame_derivatives[mu]);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto [mu, nu] = CurvatureSample::kPairs[i];
    const ComplexMatrix xm = s.frame_derivatives[std::size_t(mu)].adjoint() * perp[std::size_t(nu)];
    c.f_components[i] = xm - xm.adjoint();
  }
  return c;
}

namespace detail {
template <typename FrameAt>
std::array<ComplexMatrix, 4> central_frame_derivatives(const Point4& x, double h, FrameAt&& frame_at) {
  std::array<ComplexMatrix, 4> dv;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Point4 xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    dv[mu] = (frame_at(xp) - frame_at(xm)) / (2 * h);
  }
  return dv;
}

// Five-point stencil; used where A must be anti-Hermitian to roundoff.
template <typename FrameAt>
std::array<ComplexMatrix, 4> fourth_order_frame_derivatives(const Point4& x, double h, FrameAt&& frame_at) {
  std::array<ComplexMatrix, 4> dv;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    auto at = [&](double s) {
      Point4 y = x;
      y[mu] += s * h;
      return frame_at(y);
    };
    dv[mu] = (8.0 * (at(1) - at(-1)) - (at(2) - at(-2))) / (12 * h);
  }
  return dv;
}

inline void require_adhm_solution(const AdhmData& d) {
  const auto res = adhm_residuals(d);
  if (res.complex_residual > 1e-8 || res.real_residual > 1e-8)
    fail(errc::invalid_argument, "data violates the ADHM equations (residuals " + std::to_string(res.complex_residual) + ", " +
                                     std::to_string(res.real_residual) + ")");
}
}  // namespace detail

/// Connection in the gauge where the framing block E^* v is positive
/// Hermitian (v = P E (E^* P E)^{-1/2}). This is the singular gauge: it breaks
/// down at the instanton centers, where SingularGauge is raised.
inline GaugeSample build_connection(const AdhmData& d, const Point4& x, double h = 1e-4) {
  detail::require_adhm_solution(d);
  fiber_frame(d, x);
  const auto n = 2 * d.k + d.r;
  const ComplexMatrix e = ComplexMatrix::Identity(n, n).rightCols(d.r);
  auto canonical = [&](const Point4& y) { return align_frame(fiber_projector(d, y), e, 1e-12); };
  ComplexMatrix v = canonical(x);
  return make_gauge_sample(x, std::move(v), detail::fourth_order_frame_derivatives(x, h, canonical));
}

namespace detail {
/// Orthonormal fiber frame at x; the SVD is only needed where the Gram matrix is
/// ill-conditioned or the framing block is nearly orthogonal to the fiber.
inline ComplexMatrix base_frame(const AdhmData& d, const Point4& x) {
  const ComplexMatrix m = adhm_operator(d, x);
  const ComplexMatrix gram = m * m.adjoint();
  Eigen::LLT<ComplexMatrix> llt(gram);
  if (llt.info() == Eigen::Success) {
    const double diag_min = llt.matrixLLT().diagonal().real().minCoeff();
    const double scale = std::sqrt(gram.diagonal().real().maxCoeff());
    if (diag_min > 1e3 * kDefaultKernelTol * scale) {
      const auto n = m.cols();
      const ComplexMatrix e = ComplexMatrix::Identity(n, n).rightCols(d.r);
      const ComplexMatrix pe = e - m.adjoint() * llt.solve(m.rightCols(d.r));
      Eigen::LLT<ComplexMatrix> g(pe.adjoint() * pe);
      if (g.info() == Eigen::Success && g.matrixLLT().diagonal().real().minCoeff() > 1e-4)
        return g.matrixU().solve<Eigen::OnTheRight>(pe);
    }
  }
  return fiber_frame(d, x);
}

inline CurvatureSample field_strength_unchecked(const AdhmData& d, const Point4& x, double h) {
  ComplexMatrix v0 = base_frame(d, x);
  auto local = [&](const Point4& y) { return local_frame(d, y, v0); };
  return curvature(make_gauge_sample(x, v0, central_frame_derivatives(x, h, local)));
}
}  // namespace detail

/// Curvature at x from frames aligned to the SVD frame at x, so the local
/// gauge is smooth even at instanton centers.
inline CurvatureSample field_strength(const AdhmData& d, const Point4& x, double h = 1e-2) {
  if (!(h > 0)) fail(errc::invalid_argument, "step must be positive");
  detail::require_adhm_solution(d);
  return detail::field_strength_unchecked(d, x, h);
}

/// |F|^2 = sum_{mu<nu} -tr(F_{mu nu}^2).
inline double energy_density(const CurvatureSample& c) {
  double e = 0;
  for (const auto& f : c.f_components) e -= (f * f).trace().real();
  return e;
}

/// Integrand of tr(F^F) against dx1 dx2 dx3 dx4; equals |F|^2 for ASD fields.
inline double topological_density(const CurvatureSample& c) {
  const auto& f = c.f_components;
  return 2 * (f[0] * f[5] - f[1] * f[4] + f[2] * f[3]).trace().real();
}

/// |F+| over all six components, F+ = (F + *F)/2; each of F12+F34, F13+F42,
/// F14+F23 appears twice with weight 1/2.
inline double asd_residual(const CurvatureSample& c) {
  const auto& f = c.f_components;
  return std::sqrt(0.5 * ((f[0] + f[5]).squaredNorm() + (f[1] - f[4]).squaredNorm() + (f[2] + f[3]).squaredNorm()));
}

inline double anti_hermitian_defect(const ComplexMatrix& m) { return (m + m.adjoint()).norm(); }

struct ChargeReport {
  double charge = 0;
  double action = 0;
  double max_asd_residual = 0;
  double max_field_norm = 0;  // max over the grid of sqrt(|F|^2)
  double max_relative_asd = 0;  // max over the grid of residual / |F| where |F| > 1e-6 max|F|
  Point4 argmax_energy{};
};

struct PointDiagnostics {
  double energy = 0, topological = 0, asd = 0;
};

inline PointDiagnostics point_diagnostics(const AdhmData& d, const Point4& x, double h) {
  const auto c = detail::field_strength_unchecked(d, x, h);
  return {energy_density(c), topological_density(c), asd_residual(c)};
}

/// Charge (1/8pi^2) int tr(F^F) and action int |F|^2 by the trapezoid rule on g,
/// with curvature stencil step h. Deterministic for any worker count.
inline ChargeReport charge_and_action(const AdhmData& d, const Grid4D& g, double h, int workers = 1) {
  detail::require_adhm_solution(d);
  std::vector<PointDiagnostics> diag(g.size());
  const std::size_t slice = g.size() / std::size_t(g.n);
  parallel_for(std::size_t(g.n), workers, [&](std::size_t i0) {
    for (std::size_t j = 0; j < slice; ++j) {
      const std::size_t idx = i0 * slice + j;
      diag[idx] = point_diagnostics(d, g.point(idx), h);
    }
  });
  std::vector<double> energy(g.size()), topo(g.size());
  ChargeReport rep;
  double max_energy = -1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    energy[i] = diag[i].energy;
    topo[i] = diag[i].topological;
    rep.max_asd_residual = std::max(rep.max_asd_residual, diag[i].asd);
    if (diag[i].energy > max_energy) {
      max_energy = diag[i].energy;
      rep.argmax_energy = g.point(i);
    }
  }
  rep.max_field_norm = std::sqrt(std::max(0.0, max_energy));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double fn = std::sqrt(std::max(0.0, diag[i].energy));
    if (fn > 1e-6 * rep.max_field_norm) rep.max_relative_asd = std::max(rep.max_relative_asd, diag[i].asd / fn);
  }
  rep.action = integrate_samples(g, energy);
  rep.charge = integrate_samples(g, topo) / (8 * std::numbers::pi * std::numbers::pi);
  return rep;
}

/// Gauge map sampled at a point; must return an r x r unitary.
using GaugeMap = std::function<ComplexMatrix(const Point4&)>;

/// v -> v g^*, so A -> g A g^{-1} - (dg) g^{-1}. dg by central differences with step h.
inline std::vector<GaugeSample> gauge_transform(const std::vector<GaugeSample>& samples, const GaugeMap& g, double h = 1e-5) {
  std::vector<GaugeSample> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    const ComplexMatrix gx = g(s.x);
    if (!is_unitary(gx, 1e-10)) fail(errc::non_unitary, "gauge map is not unitary at a sample");
    const auto dg = detail::central_frame_derivatives(s.x, h, g);
    ComplexMatrix v = s.frame * gx.adjoint();
    std::array<ComplexMatrix, 4> dv;
    for (std::size_t mu = 0; mu < 4; ++mu) dv[mu] = s.frame_derivatives[mu] * gx.adjoint() + s.frame * dg[mu].adjoint();
    out.push_back(make_gauge_sample(s.x, std::move(v), std::move(dv)));
  }
  return out;
}

/// Operational nondegeneracy: the fiber has dimension r at every listed point.
inline void check_nondegenerate(const AdhmData& d, const std::vector<Point4>& points) {
  for (const auto& x : points) fiber_frame(d, x);
}

enum class LieGroup { SU, Sp, Spin, G2, F4, E6, E7, E8 };

inline LieGroup parse_group(const std::string& s) {
  if (s == "SU") return LieGroup::SU;
  if (s == "Sp") return LieGroup::Sp;
  if (s == "Spin") return LieGroup::Spin;
  if (s == "G2") return LieGroup::G2;
  if (s == "F4") return LieGroup::F4;
  if (s == "E6") return LieGroup::E6;
  if (s == "E7") return LieGroup::E7;
  if (s == "E8") return LieGroup::E8;
  fail(errc::unsupported_group, "unknown group '" + s + "' (SU, Sp, Spin, G2, F4, E6, E7, E8)");
}

inline std::string group_name(LieGroup g) {
  switch (g) {
    case LieGroup::SU: return "SU";
    case LieGroup::Sp: return "Sp";
    case LieGroup::Spin: return "Spin";
    case LieGroup::G2: return "G2";
    case LieGroup::F4: return "F4";
    case LieGroup::E6: return "E6";
    case LieGroup::E7: return "E7";
    case LieGroup::E8: return "E8";
  }
  return "?";
}

/// Whether irreducible ASD connections of charge k exist on S^4 for the group.
/// rank_param is ignored for the exceptional groups.
inline bool existence_threshold(LieGroup group, int rank_param, int k) {
  if (k < 1) fail(errc::invalid_argument, "k must be positive");
  switch (group) {
    case LieGroup::SU:
      if (rank_param < 2) fail(errc::unsupported_group, "SU(r) needs r >= 2");
      return 2 * k >= rank_param;
    case LieGroup::Sp:
      if (rank_param < 1) fail(errc::unsupported_group, "Sp(r) needs r >= 1");
      return k >= rank_param;
    case LieGroup::Spin:
      if (rank_param < 7) fail(errc::unsupported_group, "Spin(r) is covered only for r >= 7");
      return 4 * k >= rank_param;
    case LieGroup::G2: return k >= 2;
    case LieGroup::F4:
    case LieGroup::E6:
    case LieGroup::E7:
    case LieGroup::E8: return k >= 3;
  }
  fail(errc::unsupported_group, "unknown group");
}

inline long moduli_dimension(long k) {
  if (k < 1) fail(errc::invalid_argument, "k must be positive");
  return 8 * k - 3;
}

}  // namespace gaugekit
