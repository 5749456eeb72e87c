#pragma once

#include <optional>
#include <vector>

#include "pstar/forms.hpp"

namespace pstar {

/// Representability of a linear functional omega relative to a subspace B of
/// RA: positivity of the Gram matrix Q[j][i] = omega(x_j* x_i) (R1), the
/// symmetry identity omega(y*(a*x)) = conj(omega(x*(ay))) (R2), and kernel
/// boundedness (R3): for each basis a the covector x -> omega(a*x) must
/// vanish on ker Q. gamma[m] is the minimal bound, the norm of the Riesz
/// vector for basis element m (filled when R1 and R3 hold).
struct RepresentabilityReport {
  bool r1 = false;
  bool r2 = false;
  bool r3 = false;
  CMatrix Q;
  std::vector<double> gammas;
  bool admissible = false;  // B != {0} and B != C e
  std::string witness;

  bool pass() const { return r1 && r2 && r3; }
};

RepresentabilityReport check_representable(const PartialStarAlgebra& alg,
                                           const LinearFunctional& omega,
                                           const Subspace& B);

/// The triple built from a representable functional: the quotient of B by the
/// null space of omega(x*x), the Riesz extension of the quotient map to the
/// whole algebra, and the representation pi(a) lambda(x) = lambda(ax).
struct GnsRep {
  Subspace B;
  QuotientSpace quotient;        // factor G, r x k
  CMatrix lambda_ext;            // r x n, lambda(a) = lambda_ext * coords(a)
  std::vector<CMatrix> pi;       // r x r per basis index
  std::optional<CVector> cyclic; // lambda(e) when the unit lies in B
  std::vector<double> gammas;

  int rank() const { return quotient.rank(); }
  CVector lambda(const Element& a) const { return lambda_ext * a.coords; }
  CMatrix pi_of(const Element& a) const;
};

/// Throws NotRepresentable when (R1)-(R3) fail.
GnsRep gns_construct(const PartialStarAlgebra& alg,
                     const LinearFunctional& omega, const Subspace& B);

struct GnsVerification {
  CheckResult adjoint;          // pi(a*) = pi(a)^H
  CheckResult multiplicative;   // pi(ab) = pi(a) pi(b) on declared pairs
  CheckResult matrix_elements;  // omega(y*(ax)) = <pi(a)lambda(x), lambda(y)>
  CheckResult cyclicity;        // omega(a) = <pi(a) xi, xi>, pi(B) xi spans

  bool pass() const {
    return adjoint.pass && multiplicative.pass && matrix_elements.pass &&
           cyclicity.pass;
  }
};

GnsVerification verify_gns(const PartialStarAlgebra& alg,
                           const LinearFunctional& omega, const GnsRep& rep);

/// Isometry U with U lambda_1(x) = lambda_2(x) for x in B1, exhibiting the
/// B1-construction as a subrepresentation of the B2-construction.
struct SubrepEmbedding {
  CMatrix U;  // r2 x r1
  double isometry_residual = 0.0;
  double intertwining_residual = 0.0;
};

/// Throws NotNested when B1 is not contained in B2, NotRepresentable when
/// either subspace fails (R1)-(R3).
SubrepEmbedding embed_subrep(const PartialStarAlgebra& alg,
                             const LinearFunctional& omega, const Subspace& B1,
                             const Subspace& B2);

}  // namespace pstar
