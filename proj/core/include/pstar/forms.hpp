#pragma once

#include <optional>
#include <string>

#include "pstar/algebra.hpp"

namespace pstar {

/// Sesquilinear form phi(x, y) = y^H P x with P Hermitian. Linear in the
/// first argument, conjugate-linear in the second, so P[j][i] = phi(e_i, e_j).
class SesquiForm {
 public:
  SesquiForm() = default;
  SesquiForm(CMatrix p, std::string label = {});

  Complex operator()(const Element& x, const Element& y) const {
    return y.coords.dot(matrix_ * x.coords);
  }
  Complex operator()(const CVector& x, const CVector& y) const {
    return y.dot(matrix_ * x);
  }

  const CMatrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const std::string& label() const { return label_; }
  bool hermitian(double tol) const { return is_hermitian(matrix_, tol); }

 private:
  CMatrix matrix_;
  std::string label_;
};

struct PositivityResult {
  bool positive = false;
  double min_eigenvalue = 0.0;
};

/// Positivity of a Hermitian form: min eigenvalue >= -tol.
/// Throws NonHermitian when P deviates from P^H by more than tol.
PositivityResult form_positivity(const SesquiForm& f, double tol = kDefaultTol);

/// Null space N = {x : phi(x, x) = 0} = ker P, by singular values with
/// relative threshold tol * sigma_max. Throws NotPositive.
Subspace form_null_space(const SesquiForm& f, double tol = kDefaultTol);

/// The quotient of a domain subspace by the null space of a positive form,
/// stored as a rank-r factor G with G^H G = restricted Gram matrix. The map
/// lambda sends domain coordinates c to G c, and <lambda(x), lambda(y)>
/// reproduces the form.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(CMatrix factor, bool clamped)
      : factor_(std::move(factor)), clamped_(clamped) {}

  int rank() const { return static_cast<int>(factor_.rows()); }
  int domain_dim() const { return static_cast<int>(factor_.cols()); }
  const CMatrix& factor() const { return factor_; }
  CVector map(const CVector& domain_coords) const { return factor_ * domain_coords; }
  /// True when eigenvalues in [-tol, 0) were clamped to zero.
  bool clamped() const { return clamped_; }

 private:
  CMatrix factor_;
  bool clamped_ = false;
};

/// Rank factorization of a Hermitian PSD Gram matrix (eigendecomposition,
/// kept eigenvalues above tol * lambda_max, descending). Eigenvalues in
/// [-tol, 0) are clamped; anything below -tol throws NotPositive.
QuotientSpace quotient_from_gram(const CMatrix& gram, double tol);

/// GNS quotient of `f` restricted to `domain`.
QuotientSpace gns_quotient(const SesquiForm& f, const Subspace& domain,
                           double tol = kDefaultTol);

/// omega(x) = w . coords(x) (no conjugation).
struct LinearFunctional {
  CRowVector w;
  std::string label;

  Complex operator()(const Element& x) const { return (w * x.coords)(0); }
  int dim() const { return static_cast<int>(w.size()); }
};

/// Pre-core condition report for a subspace B against a positive form:
/// (i) B inside RA, (ii) domain closure (vacuous here, the form lives on all
/// of A), (iv) phi(ax, y) = phi(x, a*y), (v) phi(a*x, by) = phi(x, (ab)y).
/// Nontriviality (B != {0}, B != Ce) is reported separately and does not
/// gate the conditions.
struct PrecoreReport {
  CheckResult in_ra;               // (i)
  CheckResult domain_closure;      // (ii)
  CheckResult invariance;          // (iv)
  CheckResult product_invariance;  // (v)
  bool nontrivial = false;

  bool pass() const {
    return in_ra.pass && domain_closure.pass && invariance.pass &&
           product_invariance.pass;
  }
};

PrecoreReport check_precore(const PartialStarAlgebra& alg, const SesquiForm& f,
                            const Subspace& B);

/// Core test: lambda(B) must fill the whole quotient space of f. The rank
/// comparison and the orthogonal-complement test are both computed; is_core
/// reports the rank verdict. When B is not a core, orth_witness is an element
/// a0 with lambda(a0) orthogonal to lambda(B) and phi(a0, a0) > 0.
struct CoreResult {
  bool is_core = false;
  int rank_B = 0;
  int rank_total = 0;
  bool orth_trivial = false;
  std::optional<Element> orth_witness;
};

CoreResult check_core(const PartialStarAlgebra& alg, const SesquiForm& f,
                      const Subspace& B);

/// Compressed form phi_x(a, b) = phi(a x, b x) for a universal right
/// multiplier x. Throws NotUniversalMultiplier.
SesquiForm compress_form(const PartialStarAlgebra& alg, const SesquiForm& f,
                         const Element& x);

}  // namespace pstar
