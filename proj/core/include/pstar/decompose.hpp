#pragma once

#include <optional>

#include "pstar/gns.hpp"

namespace pstar {

/// omega_phi(a) = phi(a, e). Throws NoUnit.
LinearFunctional functional_from_form(const PartialStarAlgebra& alg,
                                      const SesquiForm& f);

/// The invariant part of a positive form with pre-core B containing the
/// unit: Omega(a, b) = <pi(a) xi, pi(b) xi> from the GNS triple of omega_phi.
/// Throws PrecoreViolation / NotRepresentable.
SesquiForm ips_part(const PartialStarAlgebra& alg, const SesquiForm& f,
                    const Subspace& B);

struct IpsVerification {
  PrecoreReport precore;
  CoreResult core;

  bool pass() const { return precore.pass() && core.is_core; }
};

/// Report-only check that `omega_form` has B as a core (the ips property).
IpsVerification verify_ips(const PartialStarAlgebra& alg,
                           const SesquiForm& omega_form, const Subspace& B);

struct LemmaCounterexample {
  int a, b, x, y;
  Complex lhs, rhs;
};

/// Exhaustive basis check of Omega(ax, by) = phi(ax, by) for a* in L(b) and
/// x, y in B, plus the one-sided case Omega(ax, y) = phi(ax, y).
/// Throws PrecoreViolation when B is not a pre-core for f.
std::optional<LemmaCounterexample> lemma_consistency(
    const PartialStarAlgebra& alg, const SesquiForm& f, const SesquiForm& omega,
    const Subspace& B);

/// phi = ips + singular with the singular part vanishing against B.
struct Decomposition {
  LinearFunctional omega_phi;
  SesquiForm ips;
  SesquiForm singular;
  Subspace B;
  bool B_is_core = false;
  bool singular_nonzero = false;
  std::optional<Element> witness;  // maximizer of s(a, a) when nonzero
};

Decomposition decompose_form(const PartialStarAlgebra& alg, const SesquiForm& f,
                             const Subspace& B);

/// Three-way singularity classification; `zero` is neither singular nor
/// core-defective and is kept apart rather than forced into either bucket.
enum class SingularVerdict { zero, singular, not_singular };

struct SingularityResult {
  bool is_singular = false;
  SingularVerdict verdict = SingularVerdict::not_singular;
  std::optional<Element> witness;
};

/// True iff psi annihilates B in one argument and psi != 0. Pre: psi positive
/// with pre-core B (PrecoreViolation / NotPositive otherwise).
SingularityResult is_singular(const PartialStarAlgebra& alg,
                              const SesquiForm& psi, const Subspace& B);

}  // namespace pstar
