#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace rainbow::detail {

// mt19937_64 output is fixed by the standard; the distributions are not, so
// bounded draws and shuffles are done here to keep seeded runs portable.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

template <typename T>
void shuffle(std::vector<T>& xs, std::mt19937_64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::swap(xs[i - 1], xs[uniform_below(rng, i)]);
  }
}

}  // namespace rainbow::detail
