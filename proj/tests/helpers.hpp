#pragma once

#include "fbca/io.hpp"
#include "fbca/monomial.hpp"

#include <string>

#ifndef FBCA_FIXTURE_DIR
#error "FBCA_FIXTURE_DIR must be defined by the build"
#endif

namespace fbca::testing {

inline std::string fixture(const std::string &name) {
  return std::string(FBCA_FIXTURE_DIR) + "/" + name;
}

inline Fbc load_fbc(const std::string &name) {
  return fbc_from_json(load_json_file(fixture(name)));
}

inline MonomialAlgebra load_alg(const std::string &name) {
  AlgebraInput in = algebra_from_json(load_json_file(fixture(name)));
  return make_monomial_algebra(in.quiver, in.generators);
}

// k[x]/<x^n>: one vertex, one loop.
inline MonomialAlgebra kx(int n) {
  Quiver q;
  q.vertices = {"1"};
  q.arrows.push_back({"x", 0, 0, "x"});
  Path g{0, std::vector<int>(n, 0)};
  return make_monomial_algebra(q, {g});
}

// Semisimple k: one vertex, no arrows.
inline MonomialAlgebra point() {
  Quiver q;
  q.vertices = {"1"};
  return make_monomial_algebra(q, {});
}

} // namespace fbca::testing
