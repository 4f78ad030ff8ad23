#pragma once

#include "fbca/fbc.hpp"
#include "fbca/monomial.hpp"

namespace fbca {

// The f-BC E_A of a monomial algebra: one polygon of angles (i,p),
// 1 <= i <= l(p)+1, per maximal path p, with g cycling along the path,
// P grouping by underlying quiver vertex, L grouping by the outgoing arrow
// at the angle (terminal angles are singletons), and trivial degree.
struct EaResult {
  Fbc fbc;
  std::vector<std::pair<int, int>> angle_info; // angle -> (maximal index, position i)
  // Parallel over L-blocks: exactly one of the two is >= 0.
  std::vector<int> arrow_of_lblock;   // quiver arrow of A, or -1 for a dual block
  std::vector<int> maximal_of_lblock; // maximal path index for dual blocks, else -1
};

EaResult build_ea(const MonomialAlgebra &A);

// Proposition 3.1 style report: axioms, sigma = id, trivial degree, (sf7),
// and agreement with the direct (f7) check. Failures indicate bugs.
AxiomReport verify_ea(const MonomialAlgebra &A);

} // namespace fbca
