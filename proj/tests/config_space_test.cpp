#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pca/config_space.hpp"
#include "pca/error.hpp"
#include "pca/numeric.hpp"
#include "pca/rules.hpp"
#include "test_util.hpp"

namespace pca {
namespace {

std::vector<std::string> literals(const ConfigSpace& s) {
  std::vector<std::string> out;
  for (const auto& x : s.configs()) out.push_back(x.to_string());
  return out;
}

TEST(EnumerateBinary, FourTwoOrder) {
  const auto s = enumerate_binary(4, 2);
  EXPECT_EQ(literals(s),
            (std::vector<std::string>{"0011", "0110", "1100", "1001", "0101", "1010"}));
  EXPECT_EQ(s.class_count(), 2u);
  EXPECT_EQ(s.class_of(4), 1u);
  EXPECT_EQ(s.representative(1).to_string(), "0101");
}

TEST(EnumerateBinary, Sizes) {
  EXPECT_EQ(enumerate_binary(6, 3).size(), 20u);
  EXPECT_EQ(enumerate_binary(8, 4).size(), 70u);
  EXPECT_EQ(enumerate_binary(8, 4).class_count(), 10u);
  EXPECT_EQ(enumerate_binary(9, 3).size(), 84u);
  EXPECT_EQ(enumerate_binary(9, 3).class_count(), 10u);
  EXPECT_EQ(enumerate_binary(5, 0).size(), 1u);
  EXPECT_EQ(enumerate_binary(5, 5).size(), 1u);
  EXPECT_THROW(enumerate_binary(4, 5), ParameterError);
}

TEST(EnumerateBinary, SizeIsBinomialAndClassesAreRotationOrbits) {
  for (std::size_t L = 1; L <= 12; ++L) {
    for (std::size_t m = 0; m <= L; ++m) {
      const auto s = enumerate_binary(L, m);
      ASSERT_EQ(BigInt(s.size()), binomial(static_cast<long long>(L), static_cast<long long>(m)));
      for (std::size_t id = 0; id < s.size(); ++id) {
        ASSERT_EQ(s.config(id).particles(), m);
        ASSERT_EQ(s.id_of(s.config(id)), id);
        const auto c = s.class_of(id);
        ASSERT_EQ(s.representative(c), canonical_rotation(s.config(id)));
        ASSERT_EQ(s.class_of(s.id_of(s.config(id).rotated(1))), c);
      }
    }
  }
}

TEST(EnumerateSpecies, KnownSpaces) {
  const auto a = enumerate_species_reachable(RingConfig::parse("AABAAB00"));
  EXPECT_EQ(a.size(), 84u);
  EXPECT_EQ(a.class_count(), 12u);
  const auto b = enumerate_species_reachable(RingConfig::parse("AABA000"));
  EXPECT_EQ(b.size(), 140u);
  EXPECT_EQ(b.class_count(), 20u);
}

TEST(EnumerateSpecies, FrozenRing) {
  const auto s = enumerate_species_reachable(RingConfig::parse("AABB"));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.class_count(), 1u);
  EXPECT_THROW(enumerate_species_reachable(RingConfig::parse("000", Alphabet::Species)),
               ParameterError);
  EXPECT_THROW(enumerate_species_reachable(RingConfig::parse("0101")), AlphabetError);
}

bool same_cyclic_sequence(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + r) % b.size()];
    if (ok) return true;
  }
  return false;
}

// Reachable closure equals the combinatorial set "same counts, same cyclic
// particle order", and one more BFS layer adds nothing.
TEST(EnumerateSpecies, ClosureMatchesCombinatorialCharacterization) {
  std::mt19937_64 gen(2024);
  int checked = 0;
  while (checked < 40) {
    const std::size_t L = 3 + static_cast<std::size_t>(gen() % 8);
    const auto x0 = testing::random_ring(gen, Alphabet::Species, L);
    if (x0.particles() == 0 || x0.particles() == L) continue;
    const auto s = enumerate_species_reachable(x0);
    ASSERT_EQ(s.size(), species_space_size(x0)) << x0.to_string();
    const auto seq = x0.particle_sequence();
    for (const auto& x : s.configs()) {
      ASSERT_EQ(x.count(kA), x0.count(kA));
      ASSERT_EQ(x.count(kB), x0.count(kB));
      ASSERT_TRUE(same_cyclic_sequence(seq, x.particle_sequence()));
      for (const auto& mv : movers(x, Model::Epbca2)) {
        const auto y = apply_hops(x, {mv}, 1);
        ASSERT_TRUE(s.find(y).has_value());
      }
    }
    ++checked;
  }
}

TEST(ConfigSpace, RejectsDuplicatesAndForeignConfigs) {
  std::vector<RingConfig> v{RingConfig::parse("01"), RingConfig::parse("01")};
  EXPECT_THROW(ConfigSpace::from_configs(v), ParameterError);
  const auto s = enumerate_binary(4, 2);
  EXPECT_FALSE(s.find(RingConfig::parse("0111")).has_value());
  EXPECT_THROW(s.id_of(RingConfig::parse("0111")), ClosureError);
}

}  // namespace
}  // namespace pca
