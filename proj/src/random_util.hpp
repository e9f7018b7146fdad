#pragma once

#include <cstdint>
#include <random>

namespace cliquespec::detail {

// Uniform draw in [0, bound) by rejection, independent of the standard
// library's distribution implementations so seeded runs match everywhere.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace cliquespec::detail
