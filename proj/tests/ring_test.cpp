#include <gtest/gtest.h>

#include <random>

#include "pca/error.hpp"
#include "pca/ring.hpp"
#include "test_util.hpp"

namespace pca {
namespace {

TEST(RingConfig, ParsesAndPrints) {
  const auto x = RingConfig::parse("00AABAAB");
  EXPECT_EQ(x.alphabet(), Alphabet::Species);
  EXPECT_EQ(x.size(), 8u);
  EXPECT_EQ(x.to_string(), "00AABAAB");
  EXPECT_EQ(x.count(kA), 4u);
  EXPECT_EQ(x.count(kB), 2u);
  EXPECT_EQ(RingConfig::parse("0101").alphabet(), Alphabet::Binary);
}

TEST(RingConfig, RejectsForeignCharacters) {
  EXPECT_THROW(RingConfig::parse("01x1"), AlphabetError);
  EXPECT_THROW(RingConfig::parse("01A", Alphabet::Binary), AlphabetError);
  EXPECT_THROW(RingConfig::parse("", Alphabet::Binary), ParameterError);
}

TEST(RingConfig, CyclicIndexing) {
  const auto x = RingConfig::parse("1000");
  EXPECT_EQ(x.at(4), kOne);
  EXPECT_EQ(x.at(-4), kOne);
  EXPECT_EQ(x.at(-1), kEmpty);
  EXPECT_EQ(x.rotated(3).to_string(), "0100");
}

TEST(Count10, KnownValues) {
  EXPECT_EQ(count_10(RingConfig::parse("0011")), 1u);
  EXPECT_EQ(count_10(RingConfig::parse("0101")), 2u);
  EXPECT_EQ(count_10(RingConfig::parse("0000")), 0u);
  EXPECT_EQ(count_10(RingConfig::parse("1111")), 0u);
}

TEST(Count10, RejectsSpeciesRing) {
  EXPECT_THROW(count_10(RingConfig::parse("0A0B")), AlphabetError);
}

TEST(Count100101, Examples) {
  EXPECT_EQ(count_100_101(RingConfig::parse("00001111")), (Counts100{1, 0}));
  EXPECT_EQ(count_100_101(RingConfig::parse("01010101")), (Counts100{0, 4}));
  EXPECT_EQ(count_100_101(RingConfig::parse("00000000")), (Counts100{0, 0}));
  EXPECT_THROW(count_100_101(RingConfig::parse("10")), ParameterError);
}

TEST(TallySpecies, EighteenSiteExample) {
  const auto t = tally_species(RingConfig::parse("BAAA00A0B0BB00A000"));
  EXPECT_EQ(t.mA, 5u);
  EXPECT_EQ(t.mB, 4u);
  EXPECT_EQ(t.nA, 6u);
  EXPECT_EQ(t.nB, 3u);
  // A0 and B0 patterns counted directly.
  EXPECT_EQ(t.kA, 3u);
  EXPECT_EQ(t.kB, 2u);
  EXPECT_EQ(t.mA + t.mB + t.nA + t.nB, 18u);
}

TEST(TallySpecies, EdgeCases) {
  EXPECT_EQ(tally_species(RingConfig::parse("AABB")), (SpeciesTally{0, 0, 0, 0, 2, 2}));
  EXPECT_THROW(tally_species(RingConfig::parse("000", Alphabet::Species)), ParameterError);
  EXPECT_THROW(tally_species(RingConfig::parse("0101")), AlphabetError);
  // Wrap-around run owned by the last particle.
  EXPECT_EQ(tally_species(RingConfig::parse("0A0B0")), (SpeciesTally{1, 1, 1, 2, 1, 1}));
}

TEST(CanonicalRotation, Examples) {
  EXPECT_EQ(canonical_rotation(RingConfig::parse("0110")).to_string(), "0011");
  EXPECT_EQ(canonical_rotation(RingConfig::parse("0000")).to_string(), "0000");
  EXPECT_EQ(canonical_rotation(RingConfig::parse("1010")).to_string(), "0101");
  EXPECT_EQ(canonical_rotation(RingConfig::parse("A00ABAAB")).to_string(), "00ABAABA");
}

TEST(CanonicalRotation, MatchesBruteForceAndIsIdempotent) {
  std::mt19937_64 gen(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = trial % 2 ? Alphabet::Binary : Alphabet::Species;
    const auto x = testing::random_ring(gen, a, 1 + static_cast<std::size_t>(trial % 23));
    const auto c = canonical_rotation(x);
    ASSERT_EQ(c, testing::naive_min_rotation(x)) << x.to_string();
    ASSERT_EQ(canonical_rotation(c), c);
  }
}

TEST(PatternCounts, RotationInvariantAndConsistent) {
  std::mt19937_64 gen(777);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t L = 3 + static_cast<std::size_t>(trial % 20);
    const auto x = testing::random_ring(gen, Alphabet::Binary, L);
    const auto r = x.rotated(static_cast<std::size_t>(gen() % L));
    const auto c = count_100_101(x);
    ASSERT_EQ(count_10(x), count_10(r));
    ASSERT_EQ(c, count_100_101(r));
    ASSERT_EQ(count_10(x), c.c100 + c.c101);

    auto s = testing::random_ring(gen, Alphabet::Species, L);
    if (s.particles() == 0) continue;
    ASSERT_EQ(tally_species(s), tally_species(s.rotated(static_cast<std::size_t>(gen() % L))));
    const auto t = tally_species(s);
    ASSERT_EQ(t.mA + t.mB + t.nA + t.nB, L);
    ASSERT_LE(t.kA, std::min(t.nA, t.mA));
    ASSERT_LE(t.kB, std::min(t.nB, t.mB));
  }
}

TEST(Pack, RoundTripsAndBounds) {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = trial % 2 ? Alphabet::Binary : Alphabet::Species;
    const std::size_t L = 1 + static_cast<std::size_t>(gen() % (a == Alphabet::Binary ? 64 : 32));
    const auto x = testing::random_ring(gen, a, L);
    ASSERT_EQ(unpack(pack(x), a, L), x);
  }
  EXPECT_THROW(pack(RingConfig(Alphabet::Binary, std::vector<std::uint8_t>(65, 0))),
               ParameterError);
}

TEST(RingConfig, ParticleSequenceAndPeriod) {
  const auto x = RingConfig::parse("0AA00BB0");
  EXPECT_EQ(x.particle_sequence(), (std::vector<std::uint8_t>{kA, kA, kB, kB}));
  EXPECT_EQ(rotation_period(RingConfig::parse("01010101")), 2u);
  EXPECT_EQ(rotation_period(RingConfig::parse("00001111")), 8u);
}

}  // namespace
}  // namespace pca
