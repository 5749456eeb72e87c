#pragma once

#include <string>
#include <vector>

#include "pstar/element.hpp"
#include "pstar/linalg.hpp"

namespace pstar {

/// A subspace of the coordinate space, held as an n x k matrix with
/// orthonormal columns. Spanning sets that are already orthonormal are kept
/// verbatim so that fixture bases stay readable in reports.
class Subspace {
 public:
  Subspace() = default;

  static Subspace from_spanning(const CMatrix& vectors, double tol,
                                std::string label = {});
  static Subspace from_indices(int ambient_dim, const std::vector<int>& indices,
                               std::string label = {});
  static Subspace whole_space(int ambient_dim, std::string label = {});
  static Subspace zero_space(int ambient_dim, std::string label = {});

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const CMatrix& basis() const { return basis_; }
  const std::string& label() const { return label_; }

  Element basis_element(int i) const { return Element(basis_.col(i)); }

  CVector project(const CVector& x) const;
  bool contains(const CVector& x, double tol) const;
  bool contains(const Element& x, double tol) const { return contains(x.coords, tol); }
  bool contains_subspace(const Subspace& other, double tol) const;

  /// True when the subspace is exactly the line through v.
  bool is_line_through(const CVector& v, double tol) const;

 private:
  CMatrix basis_;  // n x k, orthonormal columns
  std::string label_;
};

}  // namespace pstar
