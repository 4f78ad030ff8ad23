#pragma once

#include "fbca/quiver.hpp"

#include <stdexcept>
#include <vector>

namespace fbca {

struct NotFiniteDimensional : std::runtime_error {
  explicit NotFiniteDimensional(const std::string &what) : std::runtime_error(what) {}
};

// A path-algebra quotient kQ/I with I generated by paths of length >= 2.
// basis is B (paths with no generator as contiguous factor), maximal is M.
// Both are stored in canonical path order.
struct MonomialAlgebra {
  Quiver quiver;
  std::vector<Path> generators;
  std::vector<Path> basis;
  std::vector<Path> maximal;

  size_t dimension() const { return basis.size(); }
  bool in_basis(const Path &p) const;
};

// Validates generators (length >= 2), minimizes them (drops any generator
// containing another as a factor), and computes B and M by breadth-first
// extension. Throws NotFiniteDimensional when more than cap paths are found.
MonomialAlgebra make_monomial_algebra(Quiver quiver, std::vector<Path> generators,
                                      size_t cap = 100000);

// True iff some generator is a contiguous factor of p.
bool is_zero_path(const MonomialAlgebra &alg, const Path &p);

} // namespace fbca
