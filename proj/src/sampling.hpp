#pragma once

#include <cstdint>

namespace stoc {

// Product constructions either enumerate every tuple or draw a reproducible
// pseudorandom sample of them.
struct build_mode {
  enum kind_t { full, sample } kind = full;
  std::uint64_t seed = 0;
  std::size_t count = 0;

  static build_mode sampled(std::uint64_t seed, std::size_t count) {
    return {sample, seed, count};
  }
};

// Fixed-algorithm generator so sampled outputs are identical across
// platforms and standard libraries.
struct splitmix64 {
  std::uint64_t state;

  explicit splitmix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw below `bound` by rejection on the top range.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }
};

}  // namespace stoc
