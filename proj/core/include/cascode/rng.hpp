#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace cascode {

// mt19937_64 is fully specified by the standard, but the std distributions
// are not; draws below stay bit-identical across platforms by using the raw
// engine output only.

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased draw in [0, n), n >= 1, by rejecting the biased tail.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t skip = (0ULL - n) % n;  // 2^64 mod n
  std::uint64_t x = rng();
  while (x < skip) x = rng();
  return (x - skip) % n;
}

/// Fisher-Yates permutation of 0..n-1.
inline std::vector<std::uint32_t> random_permutation(std::uint32_t n,
                                                     std::mt19937_64& rng) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  for (std::uint32_t i = n; i > 1; --i) {
    const auto j = static_cast<std::uint32_t>(rand_below(rng, i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace cascode
