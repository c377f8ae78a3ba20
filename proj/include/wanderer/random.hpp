#pragma once

// Counter-based random stream.
//
// Draw n (n = 1, 2, ...) of a stream with seed S is
//
//   x_n = mix64(S + n * 0x9E3779B97F4A7C15)   (arithmetic mod 2^64)
//   u_n = (x_n >> 11) * 2^-53                 (uniform on [0, 1))
//
// where mix64 is the SplitMix64 finalizer.  This is the SplitMix64 output
// sequence for state S.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wanderer {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class RandomStream {
 public:
  constexpr explicit RandomStream(std::uint64_t seed = 0) noexcept
      : seed_(seed) {}

  constexpr std::uint64_t next_u64() noexcept {
    ++counter_;
    return mix64(seed_ + counter_ * kGoldenGamma);
  }

  // Uniform double on [0, 1) with 53 bits of resolution.
  constexpr double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // One draw, true with probability p.  p <= 0 never fires, p >= 1 always.
  constexpr bool bernoulli(double p) noexcept { return uniform() < p; }

  constexpr std::uint64_t seed() const noexcept { return seed_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

  friend constexpr bool operator==(const RandomStream&,
                                   const RandomStream&) = default;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Seed of the run_index-th stream derived from base_seed.
constexpr std::uint64_t derive_seed(std::uint64_t base_seed,
                                    std::uint64_t run_index) noexcept {
  return mix64(mix64(base_seed) ^ mix64(run_index + kGoldenGamma));
}

// Seeds for runs [0, count).  Throws if two derived seeds coincide.
inline std::vector<std::uint64_t> derive_seeds(std::uint64_t base_seed,
                                               std::size_t count) {
  std::vector<std::uint64_t> seeds;
  seeds.reserve(count);
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < count; ++i) {
    const auto s = derive_seed(base_seed, i);
    if (!seen.insert(s).second) {
      throw std::runtime_error("derived seed collision at run index " +
                               std::to_string(i));
    }
    seeds.push_back(s);
  }
  return seeds;
}

}  // namespace wanderer
