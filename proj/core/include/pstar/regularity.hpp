#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pstar/decompose.hpp"

namespace pstar {

enum class RepSource { user, gns, ips };

/// A *-representation by matrices on C^r. The domain is the whole space: at
/// finite dimension a dense domain is everything, so D_pi = H_pi. It is still
/// carried explicitly so membership tests stay literal.
struct Representation {
  int space_dim = 0;
  std::vector<CMatrix> matrices;  // per basis index
  Subspace domain;                // subspace of C^r (whole space)
  RepSource source = RepSource::user;

  CMatrix apply(const Element& a) const;
};

struct RepValidation {
  CheckResult adjoint;
  CheckResult multiplicative;

  bool pass() const { return adjoint.pass && multiplicative.pass; }
};

RepValidation validate_representation(const PartialStarAlgebra& alg,
                                      const Representation& rep);

/// Vector form phi_xi(a, b) = <pi(a) xi, pi(b) xi>. Throws DimensionMismatch.
SesquiForm vector_form(const PartialStarAlgebra& alg, const Representation& rep,
                       const CVector& xi);

/// The largest pre-core B0 = {x in RA : pi(x) xi in domain} for phi_xi.
/// The membership test is evaluated literally even though it is always true
/// for a whole-space domain.
Subspace precore_B0(const PartialStarAlgebra& alg, const Representation& rep,
                    const CVector& xi);

/// The representation pi(a) lambda(x) = lambda(ax) on the quotient of an ips
/// form with core B. Throws NotCore.
Representation rep_from_ips(const PartialStarAlgebra& alg, const SesquiForm& f,
                            const Subspace& B);

enum class QuasiVerdict { yes, yes_sampled, no };

const char* to_string(QuasiVerdict v);

struct QuasiRegularityResult {
  QuasiVerdict verdict = QuasiVerdict::no;
  bool span_certified = false;   // the deterministic matrix-span test passed
  std::optional<CVector> witness;
  int samples = 0;
  std::uint64_t seed = 0;
};

/// Trichotomy: certified yes when every pi(a) lies in the matrix span of
/// pi(B); certified no with a witness vector otherwise when some xi has
/// span{pi(x) xi : x in B} too small; yes_sampled when all sampled xi pass.
/// Standard basis vectors are always tested before the random draws.
QuasiRegularityResult quasi_regularity_check(const PartialStarAlgebra& alg,
                                             const Representation& rep,
                                             const Subspace& B,
                                             int samples = kDefaultSamples,
                                             std::uint64_t seed = kDefaultSeed);

struct CompressionCoreResult {
  struct PerX {
    std::string label;
    bool is_core = false;
  };

  bool all_cores = false;
  std::vector<PerX> per_x;
  QuasiRegularityResult quasi;
  bool agree = false;
};

/// Both sides of the compressed-form criterion: B a core for phi_x for every
/// x in B (basis vectors plus seeded random samples) against quasi-regularity
/// of the quotient representation. Pre: f ips with core B (NotCore) and B
/// multiplication-closed (NotAnAlgebra).
CompressionCoreResult compression_core_check(const PartialStarAlgebra& alg,
                                             const SesquiForm& f,
                                             const Subspace& B,
                                             int samples = kDefaultSamples,
                                             std::uint64_t seed = kDefaultSeed);

namespace detail {
/// Per-vector span test used by the sampler: does span{pi(x) xi : x in B}
/// contain every pi(a) xi? Exposed for property tests.
bool xi_span_ok(const Representation& rep, const Subspace& B, const CVector& xi,
                double tol);
}  // namespace detail

}  // namespace pstar
