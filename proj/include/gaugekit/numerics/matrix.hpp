#pragma once

#include <Eigen/Dense>
#include <complex>

#include "gaugekit/errors.hpp"

namespace gaugekit {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultKernelTol = 1e-8;

inline double frobenius(const ComplexMatrix& m) { return m.norm(); }

/// Orthonormal columns spanning the numerical kernel of m: right singular
/// vectors whose singular value is below tol * sigma_max. Columns past the
/// row count are always kernel.
inline ComplexMatrix kernel_frame(const ComplexMatrix& m, double tol = kDefaultKernelTol) {
  if (!(tol > 0)) fail(errc::invalid_argument, "kernel tolerance must be positive");
  const Eigen::Index n = m.cols();
  if (m.rows() == 0) return ComplexMatrix::Identity(n, n);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  if (smax == 0.0) return ComplexMatrix::Identity(n, n);
  const double threshold = tol * smax;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > threshold / 10 && s(i) < threshold * 10)
      fail(errc::tolerance_ambiguous, "singular value " + std::to_string(s(i)) + " within a decade of the kernel threshold");
    if (s(i) >= threshold) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

inline bool is_unitary(const ComplexMatrix& u, double tol) {
  return (u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols())).norm() <= tol;
}

/// (M^* M)^{-1/2} for a square invertible M via the Hermitian eigendecomposition.
inline ComplexMatrix inverse_sqrt_gram(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.adjoint() * m);
  return es.eigenvectors() * es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace gaugekit
