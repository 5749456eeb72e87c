#include "pstar/subspace.hpp"

#include "pstar/error.hpp"

namespace pstar {

Subspace Subspace::from_spanning(const CMatrix& vectors, double tol,
                                 std::string label) {
  Subspace s;
  s.label_ = std::move(label);
  if (vectors.cols() == 0) {
    s.basis_ = CMatrix(vectors.rows(), 0);
    return s;
  }
  // Keep an already-orthonormal spanning set verbatim.
  const CMatrix gram = vectors.adjoint() * vectors;
  if (max_abs(gram - CMatrix::Identity(vectors.cols(), vectors.cols())) <= tol) {
    s.basis_ = vectors;
    return s;
  }
  s.basis_ = orthonormal_colspace(vectors, tol);
  return s;
}

Subspace Subspace::from_indices(int ambient_dim, const std::vector<int>& indices,
                                std::string label) {
  CMatrix m = CMatrix::Zero(ambient_dim, static_cast<int>(indices.size()));
  int col = 0;
  for (int i : indices) {
    if (i < 0 || i >= ambient_dim) {
      throw Error(errc::dimension_mismatch, "basis index out of range");
    }
    m(i, col++) = 1.0;
  }
  Subspace s;
  s.basis_ = std::move(m);
  s.label_ = std::move(label);
  return s;
}

Subspace Subspace::whole_space(int ambient_dim, std::string label) {
  Subspace s;
  s.basis_ = CMatrix::Identity(ambient_dim, ambient_dim);
  s.label_ = std::move(label);
  return s;
}

Subspace Subspace::zero_space(int ambient_dim, std::string label) {
  Subspace s;
  s.basis_ = CMatrix(ambient_dim, 0);
  s.label_ = std::move(label);
  return s;
}

CVector Subspace::project(const CVector& x) const {
  if (dim() == 0) return CVector::Zero(x.size());
  return basis_ * (basis_.adjoint() * x);
}

bool Subspace::contains(const CVector& x, double tol) const {
  const double nx = x.norm();
  if (nx == 0.0) return true;
  return (x - project(x)).norm() <= tol * nx;
}

bool Subspace::contains_subspace(const Subspace& other, double tol) const {
  for (int j = 0; j < other.dim(); ++j) {
    if (!contains(CVector(other.basis_.col(j)), tol)) return false;
  }
  return true;
}

bool Subspace::is_line_through(const CVector& v, double tol) const {
  if (dim() != 1) return false;
  if (v.norm() == 0.0) return false;
  return contains(v, tol);
}

}  // namespace pstar
