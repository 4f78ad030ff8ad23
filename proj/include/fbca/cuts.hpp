#pragma once

#include "fbca/engine.hpp"
#include "fbca/fbc.hpp"
#include "fbca/monomial.hpp"
#include "fbca/report.hpp"

namespace fbca {

// Rotation class of special cycles in Q_E. rep is the lexicographically
// least rotation of the arrow word.
struct SpecialCycleClass {
  std::vector<int> rep;
  std::vector<std::vector<int>> members; // distinct rotations occurring as special paths
  std::vector<int> arrows;               // sorted distinct arrow set
};

// Requires E symmetric with trivial degree (special paths are then cycles);
// throws NotSymmetric otherwise.
std::vector<SpecialCycleClass> special_cycle_classes(const Fbc &E, const FbcQuiver &Q);

struct CuttingSet {
  std::vector<int> choice; // per class, the chosen arrow
  std::vector<int> arrows; // sorted distinct union
  bool admissible = false; // chosen arrows pairwise distinct (|D| = t)
  // The set meets every class's arrow set exactly once. When classes share
  // arrows this is strictly stronger than admissible, and it is what the
  // cut round-trip theorem needs.
  bool exact = false;
};

// One entry per choice function (one arrow per class).
std::vector<CuttingSet> enumerate_cutting_sets(const std::vector<SpecialCycleClass> &classes);

// kQ_Lambda / <I_Lambda u D>, computed by the engine and then re-expressed
// over the subquiver Q = Q_Lambda \ D.
struct CutResult {
  size_t dim = 0;             // engine dimension of the cut quotient
  Quiver subquiver;
  std::vector<int> arrow_map;  // subquiver arrow -> arrow of Q_Lambda
  std::vector<Path> generators; // minimal zero paths, subquiver indices
  bool monomial = false;       // certificate: monomial count equals dim
  MonomialAlgebra algebra;     // valid iff monomial
  std::string witness;         // NonMonomial: dependent parallel path pair
};

CutResult cut_algebra(const Presentation &P, const std::vector<int> &D,
                      EngineOptions opt = {});

Presentation monomial_presentation(const MonomialAlgebra &A);
Presentation cut_presentation(const CutResult &cut);

// D = the dual arrows of Q_{T(A)}: checks D is an admissible cut (one dual
// arrow per special cycle class) and cut_algebra(T(A), D) ~ A.
Report verify_theorem_5_4(const MonomialAlgebra &A, size_t iso_budget = 1000000);

// For an admissible cut D of a symmetric trivial-degree type-S E: the cut
// algebra A is monomial, every special cycle is p·alpha·q with alpha in D
// and qp maximal in A, and T(A) ~ Lambda.
Report verify_theorem_5_5(const Fbc &E, const std::vector<int> &D, size_t iso_budget = 1000000);

// Corollary 5.7 round trips: monomial algebras through (T(A), dual cut) and
// back; (E,D) pairs through the cut algebra and back with an isomorphism
// carrying the dual arrows onto D.
Report bijection_harness(const std::vector<MonomialAlgebra> &algebras,
                         const std::vector<std::pair<Fbc, std::vector<int>>> &pairs,
                         size_t iso_budget = 1000000);

} // namespace fbca
