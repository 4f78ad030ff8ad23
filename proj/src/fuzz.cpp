#include "fbca/fuzz.hpp"

#include <random>

namespace fbca {

// Only the raw mt19937_64 stream is used (std::uniform_int_distribution is
// not pinned across standard libraries).
static uint64_t pick(std::mt19937_64 &rng, uint64_t n) { return rng() % n; }

MonomialAlgebra generate_monomial_algebra(const FuzzConfig &cfg, uint64_t index) {
  for (int attempt = 0; attempt < cfg.resample_budget; ++attempt) {
    std::mt19937_64 rng(cfg.seed ^ (index * 0x9E3779B97F4A7C15ULL) ^
                        (static_cast<uint64_t>(attempt) * 0xC2B2AE3D27D4EB4FULL) ^
                        0xF0E1D2C3B4A59687ULL);
    Quiver q;
    int nv = 1 + static_cast<int>(pick(rng, cfg.max_vertices));
    for (int v = 0; v < nv; ++v) q.vertices.push_back("v" + std::to_string(v));
    int na = static_cast<int>(pick(rng, cfg.max_arrows + 1));
    for (int a = 0; a < na; ++a) {
      Arrow ar;
      ar.name = "a" + std::to_string(a);
      ar.label = ar.name;
      ar.source = static_cast<int>(pick(rng, nv));
      ar.target = static_cast<int>(pick(rng, nv));
      q.arrows.push_back(std::move(ar));
    }
    auto by_source = q.arrows_by_source();

    std::vector<Path> gens;
    int ngens = na == 0 ? 0 : static_cast<int>(pick(rng, 2 * na + 1));
    for (int g = 0; g < ngens; ++g) {
      int len = 2 + static_cast<int>(pick(rng, cfg.max_gen_length - 1));
      int a0 = static_cast<int>(pick(rng, na));
      Path p{q.arrows[a0].source, {a0}};
      while (p.length() < len) {
        const auto &outs = by_source[path_target(q, p)];
        if (outs.empty()) break;
        p.word.push_back(outs[pick(rng, outs.size())]);
      }
      if (p.length() >= 2) gens.push_back(std::move(p));
    }

    try {
      return make_monomial_algebra(std::move(q), std::move(gens), cfg.dim_cap);
    } catch (const NotFiniteDimensional &) {
      // resample from the next substream
    }
  }
  throw ResampleBudgetExceeded("no finite-dimensional instance within " +
                               std::to_string(cfg.resample_budget) + " attempts at index " +
                               std::to_string(index));
}

} // namespace fbca
