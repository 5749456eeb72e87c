#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace pstar {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::uint64_t kDefaultSeed = 424243;
inline constexpr int kDefaultSamples = 64;

/// Inner product, linear in the first argument: <x, y> = y^H x.
inline Complex inner(const CVector& x, const CVector& y) { return y.dot(x); }

inline double max_abs(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const CMatrix& a, double tol) {
  return max_abs(a - a.adjoint()) <= tol;
}

/// Operator 2-norm (largest singular value).
double operator_norm(const CMatrix& a);

/// Numeric rank by singular values above tol * sigma_max.
int numeric_rank(const CMatrix& a, double tol);

/// Orthonormal basis of the column space (n x r), threshold tol * sigma_max.
CMatrix orthonormal_colspace(const CMatrix& a, double tol);

/// Orthonormal basis of the (right) null space (cols x (cols - r)).
CMatrix orthonormal_nullspace(const CMatrix& a, double tol);

/// Moore-Penrose pseudoinverse with relative threshold tol * sigma_max.
CMatrix pseudoinverse(const CMatrix& a, double tol);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const CMatrix& a);

}  // namespace pstar
