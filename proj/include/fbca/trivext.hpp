#pragma once

#include "fbca/ea.hpp"
#include "fbca/monomial.hpp"
#include "fbca/rational.hpp"
#include "fbca/report.hpp"

#include <map>
#include <optional>
#include <vector>

namespace fbca {

// Basis symbol of T(A) = A (+) D(A): Prim(p) = (p,0), Dual(p) = (0,p^v),
// p running over the path basis of A (indexed into A.basis).
struct TeSym {
  bool dual = false;
  int path = 0; // index into A.basis
  bool operator<(const TeSym &o) const {
    return dual != o.dual ? dual < o.dual : path < o.path;
  }
  bool operator==(const TeSym &o) const { return dual == o.dual && path == o.path; }
};

using TeElem = std::map<TeSym, Rat>; // zero terms never stored

struct TrivExt {
  const MonomialAlgebra *A = nullptr;

  explicit TrivExt(const MonomialAlgebra &alg) : A(&alg) {}

  size_t dimension() const { return 2 * A->dimension(); }
  TeSym prim(const Path &p) const;
  TeSym dual(const Path &p) const;

  // x later, y earlier (products read right to left, like paths).
  std::optional<TeSym> multiply_syms(TeSym x, TeSym y) const;
  TeElem multiply(const TeElem &x, const TeElem &y) const;

  std::string display_sym(TeSym s) const;
};

// Q_{T(A)}: the arrows of A followed by one dual arrow t(m) -> s(m) per
// maximal path m, named "(m)^v" from m's display form.
struct TeQuiver {
  Quiver quiver;
  std::vector<int> dual_of; // arrow -> maximal path index, or -1 for originals
};

TeQuiver te_quiver(const MonomialAlgebra &A);

// psi: arrows of Q_{E_A} to T(A); original arrow a -> Prim(a), dual block of
// m -> Dual(m). Evaluates a path by left-multiplying symbols in traversal
// order, starting from Prim(e_source).
TeElem psi_eval(const TrivExt &T, const EaResult &ea, const Quiver &qea, const Path &w);

using Theorem43Report = Report;

// (a) Q_{E_A} matches Q_{T(A)} with the original/dual tagging; (b) every
// generator of I_{E_A} (both generating sets) maps to 0 under psi; (c)
// dim A_E = 2 dim A; (d) psi-images of the quotient basis span T(A); plus
// the 0/1-dual-arrow split of the quotient basis.
Theorem43Report verify_theorem_4_3(const MonomialAlgebra &A);

} // namespace fbca
