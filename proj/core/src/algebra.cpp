#include "pstar/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace pstar {

namespace {

std::string pair_name(const PartialStarAlgebra& alg, int i, int j) {
  return "(" + alg.name(i) + ", " + alg.name(j) + ")";
}

bool near(const CVector& a, const CVector& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

/// Indices i such that every pair (i, j) with j in supp is declared
/// (side = left), or symmetrically for the right side.
std::vector<int> multiplier_indices(const PartialStarAlgebra& alg,
                                    const std::vector<int>& supp, Side side) {
  std::vector<int> out;
  for (int k = 0; k < alg.dim; ++k) {
    bool ok = true;
    for (int s : supp) {
      const bool declared =
          side == Side::left ? alg.multipliable(k, s) : alg.multipliable(s, k);
      if (!declared) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(k);
  }
  return out;
}

std::vector<int> universal_indices(const PartialStarAlgebra& alg, Side side) {
  std::vector<int> all(alg.dim);
  for (int i = 0; i < alg.dim; ++i) all[i] = i;
  return multiplier_indices(alg, all, side);
}

}  // namespace

const CVector& PartialStarAlgebra::basis_product(int i, int j) const {
  auto it = structure.find({i, j});
  if (it == structure.end()) {
    throw Error(errc::internal,
                "missing structure entry for declared pair " + pair_name(*this, i, j));
  }
  return it->second;
}

void PartialStarAlgebra::check_well_formed() const {
  if (dim <= 0) throw Error(errc::malformed_input, "dimension must be positive");
  if (static_cast<int>(basis_names.size()) != dim) {
    throw Error(errc::malformed_input, "basis_names size does not match dimension");
  }
  if (static_cast<int>(involution.perm.size()) != dim ||
      involution.phases.size() != dim) {
    throw Error(errc::malformed_input, "involution size does not match dimension");
  }
  for (int p : involution.perm) {
    if (p < 0 || p >= dim) {
      throw Error(errc::malformed_input, "involution permutation index out of range");
    }
  }
  if (static_cast<int>(gamma.size()) != dim) {
    throw Error(errc::malformed_input, "gamma table size does not match dimension");
  }
  for (const auto& row : gamma) {
    if (static_cast<int>(row.size()) != dim) {
      throw Error(errc::malformed_input, "gamma table is not square");
    }
  }
  for (const auto& [key, coords] : structure) {
    const auto [i, j] = key;
    if (i < 0 || i >= dim || j < 0 || j >= dim) {
      throw Error(errc::malformed_input, "structure index out of range");
    }
    if (!gamma[i][j]) {
      throw Error(errc::malformed_input,
                  "structure entry for non-multipliable pair " + pair_name(*this, i, j));
    }
    if (coords.size() != dim) {
      throw Error(errc::malformed_input,
                  "structure coordinates of wrong length at " + pair_name(*this, i, j));
    }
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (gamma[i][j] && structure.find({i, j}) == structure.end()) {
        throw Error(errc::malformed_input,
                    "declared pair without structure entry " + pair_name(*this, i, j));
      }
    }
  }
  if (unit && unit->dim() != dim) {
    throw Error(errc::malformed_input, "unit coordinates of wrong length");
  }
  if (tol < 0.0) throw Error(errc::malformed_input, "negative tolerance");
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Element involve(const PartialStarAlgebra& alg, const Element& x) {
  CVector out = CVector::Zero(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    if (x.coords(i) != 0.0) {
      out(alg.involution.perm[i]) +=
          std::conj(x.coords(i)) * alg.involution.phases(i);
    }
  }
  return Element(std::move(out));
}

ProductResult multiply(const PartialStarAlgebra& alg, const Element& x,
                       const Element& y) {
  const auto sx = x.support();
  const auto sy = y.support();
  for (int i : sx) {
    for (int j : sy) {
      if (!alg.multipliable(i, j)) return UndefinedPair{i, j};
    }
  }
  CVector out = CVector::Zero(alg.dim);
  for (int i : sx) {
    for (int j : sy) {
      out += x.coords(i) * y.coords(j) * alg.basis_product(i, j);
    }
  }
  return Element(std::move(out));
}

Element multiply_checked(const PartialStarAlgebra& alg, const Element& x,
                         const Element& y) {
  auto result = multiply(alg, x, y);
  if (auto* undef = std::get_if<UndefinedPair>(&result)) {
    throw Error(errc::undefined_product,
                "product undefined at basis pair " +
                    pair_name(alg, undef->left, undef->right));
  }
  return std::get<Element>(std::move(result));
}

Subspace multiplier_space(const PartialStarAlgebra& alg, const Element& y,
                          Side side) {
  const auto supp = y.support();
  if (supp.empty()) {
    return Subspace::whole_space(alg.dim, side == Side::left ? "L(0)" : "R(0)");
  }
  return Subspace::from_indices(alg.dim, multiplier_indices(alg, supp, side));
}

Subspace universal_multipliers(const PartialStarAlgebra& alg, Side side) {
  return Subspace::from_indices(alg.dim, universal_indices(alg, side),
                                side == Side::left ? "LA" : "RA");
}

std::optional<AssocCounterexample> check_semi_associativity(
    const PartialStarAlgebra& alg) {
  const auto ra = universal_indices(alg, Side::right);

  // (ab)y = a(by) with b a right multiplier of a and y universal,
  // including that by stays a right multiplier of a.
  for (int i = 0; i < alg.dim; ++i) {
    for (int j = 0; j < alg.dim; ++j) {
      if (!alg.multipliable(i, j)) continue;
      for (int k : ra) {
        const Element ej = Element::basis(alg.dim, j);
        const Element ek = Element::basis(alg.dim, k);
        const Element jk = multiply_checked(alg, ej, ek);
        for (int l : jk.support()) {
          if (!alg.multipliable(i, l)) {
            return AssocCounterexample{
                {i, j, k},
                "supp(" + alg.name(j) + "*" + alg.name(k) +
                    ") leaves the right multipliers of " + alg.name(i)};
          }
        }
        const Element lhs =
            multiply_checked(alg, Element(alg.basis_product(i, j)), ek);
        const Element rhs = multiply_checked(alg, Element::basis(alg.dim, i), jk);
        if (!near(lhs.coords, rhs.coords, alg.tol)) {
          return AssocCounterexample{
              {i, j, k}, "(" + alg.name(i) + " " + alg.name(j) + ") " +
                             alg.name(k) + " != " + alg.name(i) + " (" +
                             alg.name(j) + " " + alg.name(k) + ")"};
        }
      }
    }
  }

  // Four-factor identity x*(ab)y = (x*a)(by), x and y universal.
  for (int a = 0; a < alg.dim; ++a) {
    for (int b = 0; b < alg.dim; ++b) {
      if (!alg.multipliable(a, b)) continue;
      const Element ab(alg.basis_product(a, b));
      for (int x : ra) {
        const Element xs = involve(alg, Element::basis(alg.dim, x));
        for (int y : ra) {
          const Element ey = Element::basis(alg.dim, y);
          const Element lhs =
              multiply_checked(alg, multiply_checked(alg, xs, ab), ey);
          const Element xa =
              multiply_checked(alg, xs, Element::basis(alg.dim, a));
          const Element by =
              multiply_checked(alg, Element::basis(alg.dim, b), ey);
          auto prod = multiply(alg, xa, by);
          if (std::holds_alternative<UndefinedPair>(prod)) {
            return AssocCounterexample{
                {x, a, b, y},
                "(x*a)(by) undefined for x=" + alg.name(x) + ", a=" + alg.name(a) +
                    ", b=" + alg.name(b) + ", y=" + alg.name(y)};
          }
          if (!near(std::get<Element>(prod).coords, lhs.coords, alg.tol)) {
            return AssocCounterexample{
                {x, a, b, y},
                "x*(ab)y != (x*a)(by) for x=" + alg.name(x) + ", a=" +
                    alg.name(a) + ", b=" + alg.name(b) + ", y=" + alg.name(y)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

CMatrix multiplication_matrix(const PartialStarAlgebra& alg, const Element& a,
                              Side acting_from) {
  const Subspace universal = universal_multipliers(alg, acting_from);
  for (int i : a.support()) {
    if (!universal.contains(Element::basis(alg.dim, i), alg.tol)) {
      throw Error(errc::not_universal_multiplier,
                  alg.name(i) + " is not a universal " +
                      (acting_from == Side::left ? "left" : "right") +
                      " multiplier");
    }
  }
  CMatrix m = CMatrix::Zero(alg.dim, alg.dim);
  for (int col = 0; col < alg.dim; ++col) {
    const Element basis_el = Element::basis(alg.dim, col);
    const Element prod = acting_from == Side::left
                             ? multiply_checked(alg, a, basis_el)
                             : multiply_checked(alg, basis_el, a);
    m.col(col) = prod.coords;
  }
  return m;
}

namespace {

/// A corrupted table must surface as a failing check with the offending
/// identity, not as an exception escaping the validator.
CheckResult guarded(const char* name, const std::function<CheckResult()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return {name, false, e.what()};
  }
}

}  // namespace

namespace {

CheckResult check_involution(const PartialStarAlgebra& alg) {
  CheckResult r{"involution", true, ""};
  std::vector<int> seen(alg.dim, 0);
  for (int p : alg.involution.perm) seen[p]++;
  for (int i = 0; i < alg.dim; ++i) {
    if (seen[i] != 1) {
      return {"involution", false, "perm is not a permutation"};
    }
  }
  for (int i = 0; i < alg.dim; ++i) {
    if (alg.involution.perm[alg.involution.perm[i]] != i) {
      return {"involution", false,
              "perm applied twice moves " + alg.name(i)};
    }
    if (std::abs(std::abs(alg.involution.phases(i)) - 1.0) > alg.tol) {
      return {"involution", false, "phase of " + alg.name(i) + " not unimodular"};
    }
    const Complex there = alg.involution.phases(alg.involution.perm[i]);
    if (std::abs(there - alg.involution.phases(i)) > alg.tol) {
      return {"involution", false,
              "phase mismatch between " + alg.name(i) + " and its image"};
    }
  }
  return r;
}

CheckResult check_gamma_symmetry(const PartialStarAlgebra& alg) {
  for (int i = 0; i < alg.dim; ++i) {
    for (int j = 0; j < alg.dim; ++j) {
      const int si = alg.involution.perm[i];
      const int sj = alg.involution.perm[j];
      if (alg.gamma[i][j] != alg.gamma[sj][si]) {
        return {"gamma_symmetry", false,
                pair_name(alg, i, j) + " declared but " + pair_name(alg, sj, si) +
                    " is not"};
      }
    }
  }
  return {"gamma_symmetry", true, ""};
}

CheckResult check_product_involution(const PartialStarAlgebra& alg) {
  for (const auto& [key, coords] : alg.structure) {
    const auto [i, j] = key;
    const Element lhs = involve(alg, Element(coords));
    const Element js = involve(alg, Element::basis(alg.dim, j));
    const Element is = involve(alg, Element::basis(alg.dim, i));
    auto rhs = multiply(alg, js, is);
    if (std::holds_alternative<UndefinedPair>(rhs)) {
      return {"product_involution", false,
              "involved pair of " + pair_name(alg, i, j) + " is not declared"};
    }
    if (!near(lhs.coords, std::get<Element>(rhs).coords, alg.tol)) {
      return {"product_involution", false,
              "(xy)* != y*x* at " + pair_name(alg, i, j)};
    }
  }
  return {"product_involution", true, ""};
}

CheckResult check_unit(const PartialStarAlgebra& alg) {
  if (!alg.unit) return {"unit", true, "no unit declared"};
  const Element& e = *alg.unit;
  if (e.is_zero()) return {"unit", false, "unit is zero"};
  const auto la = universal_indices(alg, Side::left);
  const auto ra = universal_indices(alg, Side::right);
  for (int i : e.support()) {
    const bool in_la = std::find(la.begin(), la.end(), i) != la.end();
    const bool in_ra = std::find(ra.begin(), ra.end(), i) != ra.end();
    if (!in_la || !in_ra) {
      return {"unit", false,
              "unit support at " + alg.name(i) + " is not universally multipliable"};
    }
  }
  for (int i = 0; i < alg.dim; ++i) {
    const Element b = Element::basis(alg.dim, i);
    const Element left = multiply_checked(alg, e, b);
    const Element right = multiply_checked(alg, b, e);
    if (!near(left.coords, b.coords, alg.tol)) {
      return {"unit", false, "e * " + alg.name(i) + " != " + alg.name(i)};
    }
    if (!near(right.coords, b.coords, alg.tol)) {
      return {"unit", false, alg.name(i) + " * e != " + alg.name(i)};
    }
  }
  return {"unit", true, ""};
}

CheckResult check_semi_assoc_named(const PartialStarAlgebra& alg) {
  if (auto cex = check_semi_associativity(alg)) {
    return {"semi_associativity", false, cex->detail};
  }
  return {"semi_associativity", true, ""};
}

CheckResult check_ra_star(const PartialStarAlgebra& alg) {
  const Subspace ra = universal_multipliers(alg, Side::right);
  const Subspace la = universal_multipliers(alg, Side::left);
  if (ra.dim() != la.dim()) {
    return {"universal_multipliers", false, "dim RA != dim LA"};
  }
  for (int j = 0; j < ra.dim(); ++j) {
    const Element starred = involve(alg, ra.basis_element(j));
    if (!la.contains(starred, alg.tol)) {
      return {"universal_multipliers", false,
              "(RA)* escapes LA at column " + std::to_string(j + 1)};
    }
  }
  return {"universal_multipliers", true, ""};
}

}  // namespace

ValidationReport validate_algebra(const PartialStarAlgebra& alg) {
  alg.check_well_formed();
  ValidationReport report;
  report.checks.push_back(guarded("involution", [&] { return check_involution(alg); }));
  report.checks.push_back(guarded("gamma_symmetry", [&] { return check_gamma_symmetry(alg); }));
  report.checks.push_back(guarded("product_involution", [&] { return check_product_involution(alg); }));
  report.checks.push_back(guarded("unit", [&] { return check_unit(alg); }));
  report.checks.push_back(guarded("semi_associativity", [&] { return check_semi_assoc_named(alg); }));
  report.checks.push_back(guarded("universal_multipliers", [&] { return check_ra_star(alg); }));
  return report;
}

}  // namespace pstar
