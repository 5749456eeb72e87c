#pragma once

#include <vector>

#include "pstar/linalg.hpp"

namespace pstar {

/// An algebra element as a coordinate vector over the chosen basis.
/// The support uses exact-zero semantics: definedness of a partial product
/// is an algebraic question, not a numeric one.
struct Element {
  CVector coords;

  Element() = default;
  explicit Element(CVector c) : coords(std::move(c)) {}

  static Element zero(int dim) { return Element(CVector::Zero(dim)); }
  static Element basis(int dim, int index) {
    CVector c = CVector::Zero(dim);
    c(index) = 1.0;
    return Element(c);
  }

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const { return support().empty(); }

  std::vector<int> support() const {
    std::vector<int> idx;
    for (int i = 0; i < coords.size(); ++i) {
      if (coords(i) != 0.0) idx.push_back(i);
    }
    return idx;
  }
};

inline Element operator+(const Element& a, const Element& b) {
  return Element(a.coords + b.coords);
}
inline Element operator-(const Element& a, const Element& b) {
  return Element(a.coords - b.coords);
}
inline Element operator*(Complex s, const Element& a) {
  return Element(s * a.coords);
}

}  // namespace pstar
