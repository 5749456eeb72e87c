#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pstar/element.hpp"
#include "pstar/error.hpp"
#include "pstar/subspace.hpp"

namespace pstar {

/// Basis involution e_i* = phase_i * e_{perm(i)} (a phased permutation).
struct Involution {
  std::vector<int> perm;  // 0-based
  CVector phases;         // unimodular
};

enum class Side { left, right };

/// A finite-dimensional partial *-algebra given by structure constants over a
/// fixed basis. The multipliability table `gamma` decides definedness: x*y is
/// defined iff every (i, j) in supp(x) x supp(y) is a declared pair, and the
/// product is the bilinear extension of the declared basis products.
struct PartialStarAlgebra {
  int dim = 0;
  std::vector<std::string> basis_names;
  Involution involution;
  std::vector<std::vector<bool>> gamma;
  std::map<std::pair<int, int>, CVector> structure;
  std::optional<Element> unit;
  double tol = kDefaultTol;

  bool multipliable(int i, int j) const { return gamma[i][j]; }
  const CVector& basis_product(int i, int j) const;
  const std::string& name(int i) const { return basis_names[i]; }

  /// Throws MalformedInput if sizes are inconsistent or the structure map and
  /// gamma table disagree about which pairs carry a product.
  void check_well_formed() const;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

/// Runs every algebra axiom check and reports pass/fail with a witness for
/// each: involution involutivity, gamma symmetry under involution, the
/// product-involution law, unit laws, semi-associativity, and RA* = LA.
ValidationReport validate_algebra(const PartialStarAlgebra& alg);

/// x -> x* under the phased-permutation involution.
Element involve(const PartialStarAlgebra& alg, const Element& x);

struct UndefinedPair {
  int left;
  int right;
};

using ProductResult = std::variant<Element, UndefinedPair>;

/// Partial product; returns the first offending basis pair when undefined.
ProductResult multiply(const PartialStarAlgebra& alg, const Element& x,
                       const Element& y);

/// Product that is expected to be defined; throws UndefinedProduct otherwise.
Element multiply_checked(const PartialStarAlgebra& alg, const Element& x,
                         const Element& y);

/// L(y) (side = left) or R(y) (side = right) as a span of basis vectors.
Subspace multiplier_space(const PartialStarAlgebra& alg, const Element& y,
                          Side side);

/// LA (side = left) or RA (side = right).
Subspace universal_multipliers(const PartialStarAlgebra& alg, Side side);

struct AssocCounterexample {
  std::vector<int> indices;  // (i, j, k) triple or (x, a, b, y) quadruple
  std::string detail;
};

/// Checks the weak-associativity law (ab)y = a(by) for y in RA together with
/// the derived four-factor identity x*(ab)y = (x*a)(by) for x, y in RA.
std::optional<AssocCounterexample> check_semi_associativity(
    const PartialStarAlgebra& alg);

/// Left-multiplication matrix of `a` (requires supp(a) in LA) or
/// right-multiplication matrix of `a` (requires supp(a) in RA): the matrix
/// sending coords(x) to coords(a x) resp. coords(x a).
CMatrix multiplication_matrix(const PartialStarAlgebra& alg, const Element& a,
                              Side acting_from);

}  // namespace pstar
