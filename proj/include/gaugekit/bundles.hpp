#pragma once

// Rank/degree bookkeeping for bundles on curves and P^n. No sheaf data is
// represented; cohomology dimensions come from Riemann-Roch plus the rule that
// the dual of an indecomposable bundle of positive degree has no sections.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gaugekit/algebra/json.hpp"
#include "gaugekit/algebra/rational.hpp"
#include "gaugekit/errors.hpp"
#include "gaugekit/numerics/matrix.hpp"

namespace gaugekit {

struct BundleSymbol {
  long rank = 1;
  long degree = 0;
  long genus = 1;

  BundleSymbol() = default;
  BundleSymbol(long r, long d, long g = 1) : rank(r), degree(d), genus(g) {
    if (r < 1) fail(errc::invalid_argument, "rank must be positive");
    if (g < 0) fail(errc::invalid_argument, "genus must be non-negative");
  }
  BundleSymbol dual() const { return {rank, -degree, genus}; }
  friend bool operator==(const BundleSymbol&, const BundleSymbol&) = default;
};

/// h^i(P^n, O(p)) for i = 0..n.
inline std::vector<Integer> line_cohomology_pn(long n, long p) {
  if (n < 1) fail(errc::invalid_argument, "n must be positive");
  std::vector<Integer> h(std::size_t(n + 1), Integer(0));
  if (p >= 0) h[0] = binomial(n + p, n);
  if (p <= -n - 1) h[std::size_t(n)] = binomial(-p - 1, n);
  return h;
}

/// Euler characteristic d + r(1 - g).
inline long rr_curve(const BundleSymbol& e) { return e.degree + e.rank * (1 - e.genus); }

/// (h0, h1) where the bookkeeping rules determine them: line bundles with
/// d > 2g - 2 are non-special; bundles of negative degree that are duals of
/// indecomposables have h0 = 0.
inline std::optional<std::pair<long, long>> known_cohomology(const BundleSymbol& e) {
  const long chi = rr_curve(e);
  if (e.rank == 1 && e.degree > 2 * e.genus - 2) return std::pair{chi, 0L};
  if (e.degree < 0) return std::pair{0L, -chi};
  return std::nullopt;
}

inline bool nu_stability(long nu, long d) { return 2 * nu < d; }

enum class StepKind { base, tensor, extension, f_tower_step };

inline std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::base: return "base";
    case StepKind::tensor: return "tensor";
    case StepKind::extension: return "extension";
    case StepKind::f_tower_step: return "f_tower_step";
  }
  return "?";
}

/// One level of the recipe: `bundle` is obtained from `operand`.
///   tensor:       bundle = lambda^twist (x) operand
///   extension:    0 -> C^trivial_rank -> bundle -> operand -> 0
///   f_tower_step: 0 -> C -> bundle -> operand -> 0
struct ConstructionStep {
  StepKind kind = StepKind::base;
  BundleSymbol bundle;
  BundleSymbol operand;
  int twist = 0;
  long trivial_rank = 0;
  long h1_operand_dual = 0;  // dimension of the space of extension classes per trivial summand
};

/// Steps from the root down to E_{1,0}.
struct ConstructionTree {
  BundleSymbol root;
  std::vector<ConstructionStep> steps;

  /// Rebuilds (rank, degree) from E_{1,0} by applying the steps leaf-first.
  BundleSymbol replay() const {
    BundleSymbol cur(1, 0, root.genus);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      if (!(it->operand == cur)) fail(errc::invalid_argument, "construction steps do not chain");
      switch (it->kind) {
        case StepKind::tensor: cur = {cur.rank, cur.degree + it->twist * cur.rank, cur.genus}; break;
        case StepKind::extension:
        case StepKind::f_tower_step: cur = {cur.rank + it->trivial_rank, cur.degree, cur.genus}; break;
        case StepKind::base: break;
      }
    }
    return cur;
  }
  long count(StepKind k) const {
    return std::count_if(steps.begin(), steps.end(), [k](const ConstructionStep& s) { return s.kind == k; });
  }
};

inline long floor_mod(long a, long m) { return ((a % m) + m) % m; }

/// The Euclidean recipe for the indecomposable E_{r,d} on an elliptic curve.
inline ConstructionTree atiyah_tree(long r, long d) {
  if (r < 1) fail(errc::invalid_argument, "rank must be positive");
  if (std::gcd(r, floor_mod(d, r)) != 1) fail(errc::not_coprime, "gcd(" + std::to_string(r) + ", " + std::to_string(d) + ") != 1");
  ConstructionTree tree;
  tree.root = BundleSymbol(r, d, 1);
  BundleSymbol cur = tree.root;
  while (!(cur.rank == 1 && cur.degree == 0)) {
    ConstructionStep s;
    s.bundle = cur;
    if (cur.degree >= cur.rank || cur.degree < 0) {
      s.kind = StepKind::tensor;
      s.twist = cur.degree >= cur.rank ? 1 : -1;
      s.operand = BundleSymbol(cur.rank, cur.degree - s.twist * cur.rank, 1);
    } else {
      s.kind = StepKind::extension;
      s.trivial_rank = cur.degree;
      s.operand = BundleSymbol(cur.rank - cur.degree, cur.degree, 1);
      s.h1_operand_dual = known_cohomology(s.operand.dual())->second;
    }
    tree.steps.push_back(s);
    cur = s.operand;
  }
  return tree;
}

/// F_h built by h - 1 extensions by the trivial line bundle, ending at F_1 = O.
inline ConstructionTree f_tower(long h) {
  if (h < 1) fail(errc::invalid_argument, "h must be positive");
  ConstructionTree tree;
  tree.root = BundleSymbol(h, 0, 1);
  for (long level = h; level > 1; --level) {
    ConstructionStep s;
    s.kind = StepKind::f_tower_step;
    s.bundle = BundleSymbol(level, 0, 1);
    s.operand = BundleSymbol(level - 1, 0, 1);
    s.trivial_rank = 1;
    s.h1_operand_dual = 1;
    tree.steps.push_back(s);
  }
  return tree;
}

struct UnitaryPair {
  ComplexMatrix a_matrix, b_matrix;
  cplx zeta;
};

/// A e_k = e_{k-1} (indices mod r), B e_k = zeta^k e_k, zeta = exp(2 pi i d / r);
/// then A B A^{-1} B^{-1} = zeta.
inline UnitaryPair ns_matrices(long r, long d) {
  if (r < 1) fail(errc::invalid_argument, "rank must be positive");
  if (std::gcd(r, floor_mod(d, r)) != 1) fail(errc::not_coprime, "gcd(" + std::to_string(r) + ", " + std::to_string(d) + ") != 1");
  UnitaryPair u;
  // Reduce d first so the phase angle stays small and exact powers are accurate.
  const long dm = floor_mod(d, r);
  u.zeta = std::polar(1.0, 2 * std::numbers::pi * double(dm) / double(r));
  u.a_matrix = ComplexMatrix::Zero(r, r);
  u.b_matrix = ComplexMatrix::Zero(r, r);
  for (long k = 1; k <= r; ++k) {
    const long prev = (k - 2 + r) % r;  // 0-based index of e_{k-1}
    u.a_matrix(prev, k - 1) = 1;
    u.b_matrix(k - 1, k - 1) = std::polar(1.0, 2 * std::numbers::pi * double((dm * k) % r) / double(r));
  }
  return u;
}

inline ComplexMatrix group_commutator(const UnitaryPair& u) {
  return u.a_matrix * u.b_matrix * u.a_matrix.adjoint() * u.b_matrix.adjoint();
}

/// max |ABA^{-1}B^{-1} - zeta 1| entrywise.
inline double commutator_defect(const UnitaryPair& u) {
  const ComplexMatrix c = group_commutator(u);
  return (c - u.zeta * ComplexMatrix::Identity(c.rows(), c.cols())).cwiseAbs().maxCoeff();
}

/// Dimension of {X : AX = XA, BX = XB}, from the nullity of the stacked linear system.
inline long commutant_dimension(const UnitaryPair& u, double tol = 1e-9) {
  const Eigen::Index r = u.a_matrix.rows();
  const Eigen::Index n = r * r;
  ComplexMatrix sys = ComplexMatrix::Zero(2 * n, n);
  const ComplexMatrix id = ComplexMatrix::Identity(r, r);
  // vec(MX - XM) = (I (x) M - M^T (x) I) vec(X), column-major vec.
  auto block = [&](const ComplexMatrix& m, Eigen::Index row0) {
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < r; ++j)
        for (Eigen::Index a = 0; a < r; ++a)
          for (Eigen::Index b = 0; b < r; ++b)
            sys(row0 + i * r + a, j * r + b) = id(i, j) * m(a, b) - m(j, i) * id(a, b);
  };
  block(u.a_matrix, 0);
  block(u.b_matrix, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(sys);
  const auto& s = svd.singularValues();
  long rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * std::max(1.0, s(0))) ++rank;
  return long(n) - rank;
}

inline json to_json(const BundleSymbol& e) { return json{{"rank", e.rank}, {"degree", e.degree}, {"genus", e.genus}}; }

inline json to_json(const ConstructionTree& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json j{{"kind", step_kind_name(s.kind)}, {"bundle", to_json(s.bundle)}, {"operand", to_json(s.operand)}};
    if (s.kind == StepKind::tensor) j["twist"] = s.twist;
    if (s.kind != StepKind::tensor) {
      j["trivial_rank"] = s.trivial_rank;
      j["h1_operand_dual"] = s.h1_operand_dual;
    }
    steps.push_back(j);
  }
  const auto end = t.replay();
  return json{{"root", to_json(t.root)}, {"steps", steps}, {"replay", to_json(end)}, {"replay_ok", end == t.root}};
}

}  // namespace gaugekit
