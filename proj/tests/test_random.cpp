#include <gtest/gtest.h>

#include <cstdint>
#include <set>

#include "wanderer/random.hpp"

namespace wanderer {
namespace {

// Reference values from an independent SplitMix64 implementation.
TEST(RandomStream, MatchesSplitMix64Vectors) {
  struct Vector {
    std::uint64_t seed;
    std::uint64_t raw[4];
    double uniform[3];
  };
  const Vector vectors[] = {
      {0,
       {0xe220a8397b1dcdafULL, 0x6e789e6aa1b965f4ULL, 0x06c45d188009454fULL,
        0xf88bb8a8724c81ecULL},
       {0.8833108082136426, 0.43152799704850997, 0.026433771592597743}},
      {42,
       {0xbdd732262feb6e95ULL, 0x28efe333b266f103ULL, 0x47526757130f9f52ULL,
        0x581ce1ff0e4ae394ULL},
       {0.7415648787718233, 0.1599103928769201, 0.27860113025513866}},
      {0xDEADBEEFCAFEBABEULL,
       {0x0d7d93560d1929d2ULL, 0x491dfb740e50d43fULL, 0x42722bf4473e5e7dULL,
        0xd6ca8a0790fffc45ULL},
       {0.05269738055094264, 0.2856137426700258, 0.259554621828323}},
  };
  for (const auto& v : vectors) {
    RandomStream raw(v.seed);
    for (auto expected : v.raw) EXPECT_EQ(raw.next_u64(), expected);
    RandomStream uni(v.seed);
    for (double expected : v.uniform) EXPECT_EQ(uni.uniform(), expected);
  }
}

TEST(RandomStream, CounterTracksDraws) {
  RandomStream rng(7);
  EXPECT_EQ(rng.counter(), 0u);
  rng.uniform();
  rng.bernoulli(0.5);
  EXPECT_EQ(rng.counter(), 2u);
}

TEST(RandomStream, BernoulliEdges) {
  RandomStream rng(3);
  for (int i = 0; i < 10000; ++i) {
    EXPECT_FALSE(rng.bernoulli(0.0));
    EXPECT_TRUE(rng.bernoulli(1.0));
  }
}

TEST(RandomStream, UniformInUnitInterval) {
  RandomStream rng(11);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(DeriveSeed, DistinctAndStable) {
  const auto seeds = derive_seeds(42, 10000);
  EXPECT_EQ(std::set<std::uint64_t>(seeds.begin(), seeds.end()).size(), seeds.size());
  EXPECT_EQ(derive_seeds(42, 10000), seeds);
  EXPECT_NE(derive_seed(42, 0), derive_seed(43, 0));
}

}  // namespace
}  // namespace wanderer
