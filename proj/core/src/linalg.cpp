#include "pstar/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pstar {

namespace {

Eigen::JacobiSVD<CMatrix> svd_of(const CMatrix& a, unsigned options) {
  return Eigen::JacobiSVD<CMatrix>(a, options);
}

}  // namespace

double operator_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return svd_of(a, 0).singularValues()(0);
}

int numeric_rank(const CMatrix& a, double tol) {
  if (a.size() == 0) return 0;
  const auto sv = svd_of(a, 0).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double threshold = tol * sv(0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++r;
  }
  return r;
}

CMatrix orthonormal_colspace(const CMatrix& a, double tol) {
  if (a.size() == 0) return CMatrix(a.rows(), 0);
  auto svd = svd_of(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return CMatrix(a.rows(), 0);
  const double threshold = tol * sv(0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++r;
  }
  return svd.matrixU().leftCols(r);
}

CMatrix orthonormal_nullspace(const CMatrix& a, double tol) {
  if (a.rows() == 0) return CMatrix::Identity(a.cols(), a.cols());
  if (a.cols() == 0) return CMatrix(0, 0);
  auto svd = svd_of(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double threshold = tol * smax;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++r;
  }
  return svd.matrixV().rightCols(a.cols() - r);
}

CMatrix pseudoinverse(const CMatrix& a, double tol) {
  if (a.size() == 0) return CMatrix(a.cols(), a.rows());
  auto svd = svd_of(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double threshold = tol * smax;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) inv(i) = 1.0 / sv(i);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

Eigen::VectorXd hermitian_eigenvalues(const CMatrix& a) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace pstar
