#pragma once

#include "fbca/monomial.hpp"

#include <cstdint>

namespace fbca {

struct ResampleBudgetExceeded : std::runtime_error {
  explicit ResampleBudgetExceeded(const std::string &what) : std::runtime_error(what) {}
};

// Deterministic instance stream: (seed, index) fully determines the output.
struct FuzzConfig {
  uint64_t seed = 0;
  int max_vertices = 5;
  int max_arrows = 8;
  int max_gen_length = 4;
  size_t dim_cap = 60;
  int resample_budget = 1000;
};

// Pseudo-random finite-dimensional monomial algebra; instances violating the
// dimension cap are rejected and resampled from the next substream.
MonomialAlgebra generate_monomial_algebra(const FuzzConfig &cfg, uint64_t index);

} // namespace fbca
