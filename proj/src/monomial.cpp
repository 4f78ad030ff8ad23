#include "fbca/monomial.hpp"

#include <algorithm>
#include <deque>

namespace fbca {

bool MonomialAlgebra::in_basis(const Path &p) const {
  return std::binary_search(basis.begin(), basis.end(), p, PathLess{});
}

bool is_zero_path(const MonomialAlgebra &alg, const Path &p) {
  for (const Path &g : alg.generators)
    if (word_contains(p.word, g.word)) return true;
  return false;
}

MonomialAlgebra make_monomial_algebra(Quiver quiver, std::vector<Path> generators, size_t cap) {
  validate_quiver(quiver);
  for (const Path &g : generators) {
    if (!path_valid(quiver, g)) throw std::invalid_argument("generator is not a path in the quiver");
    if (g.length() < 2)
      throw std::invalid_argument("relation generators must have length >= 2");
  }

  // Minimality: drop generators containing another generator as a factor.
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Path> minimal_gens;
  for (const Path &g : generators) {
    bool redundant = false;
    for (const Path &h : generators)
      if (h != g && word_contains(g.word, h.word)) { redundant = true; break; }
    if (!redundant) minimal_gens.push_back(g);
  }

  MonomialAlgebra alg;
  alg.quiver = std::move(quiver);
  alg.generators = std::move(minimal_gens);

  // B: breadth-first extension from trivial paths; a pruned branch never
  // re-extends since B is closed under factors.
  auto by_source = alg.quiver.arrows_by_source();
  std::deque<Path> queue;
  for (size_t v = 0; v < alg.quiver.vertices.size(); ++v) queue.push_back(trivial_path(static_cast<int>(v)));
  std::vector<Path> basis;
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    basis.push_back(p);
    if (basis.size() > cap)
      throw NotFiniteDimensional("basis enumeration exceeded cap " + std::to_string(cap));
    for (int a : by_source[path_target(alg.quiver, p)]) {
      Path ext = p;
      ext.word.push_back(a);
      // p is factor-free, so a new forbidden factor must be a suffix.
      bool dead = false;
      for (const Path &g : alg.generators) {
        if (g.length() > ext.length()) continue;
        if (std::equal(g.word.begin(), g.word.end(), ext.word.end() - g.word.size())) {
          dead = true;
          break;
        }
      }
      if (!dead) queue.push_back(std::move(ext));
    }
  }
  std::sort(basis.begin(), basis.end(), canonical_less);
  alg.basis = std::move(basis);

  // M: one-arrow extensions on either side all leave B.
  auto by_target = alg.quiver.arrows_by_target();
  for (const Path &p : alg.basis) {
    bool maximal = true;
    for (int a : by_source[path_target(alg.quiver, p)]) {
      Path ext = p;
      ext.word.push_back(a);
      if (alg.in_basis(ext)) { maximal = false; break; }
    }
    if (maximal) {
      for (int a : by_target[path_source(alg.quiver, p)]) {
        Path ext;
        ext.base = alg.quiver.arrows[a].source;
        ext.word.push_back(a);
        ext.word.insert(ext.word.end(), p.word.begin(), p.word.end());
        if (alg.in_basis(ext)) { maximal = false; break; }
      }
    }
    if (maximal) alg.maximal.push_back(p);
  }
  return alg;
}

} // namespace fbca
