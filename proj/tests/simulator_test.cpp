#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "pca/config_space.hpp"
#include "pca/error.hpp"
#include "pca/markov.hpp"
#include "pca/simulator.hpp"
#include "test_util.hpp"

namespace pca {
namespace {

std::map<std::string, double> empirical_successors(const RingConfig& x, const ModelParams& p,
                                                   int draws, std::uint64_t seed) {
  CounterRng rng(seed);
  std::map<std::string, double> freq;
  for (int i = 0; i < draws; ++i) freq[step(x, p, rng).next.to_string()] += 1.0 / draws;
  return freq;
}

// Each successor frequency within 5 binomial standard deviations of the
// exact transition probability, and no successor outside the support.
void expect_law(const RingConfig& x, const ModelParams& p, std::uint64_t seed) {
  constexpr int kDraws = 100000;
  const auto freq = empirical_successors(x, p, kDraws, seed);
  const auto exact = successor_distribution(x, p);
  std::map<std::string, double> want;
  for (const auto& [y, prob] : exact) want[y.to_string()] = prob;
  for (const auto& [y, f] : freq) ASSERT_TRUE(want.count(y)) << x.to_string() << " -> " << y;
  for (const auto& [y, prob] : want) {
    const double f = freq.count(y) ? freq.at(y) : 0.0;
    const double sd = std::sqrt(prob * (1 - prob) / kDraws);
    EXPECT_NEAR(f, prob, 5 * sd + 1e-12) << x.to_string() << " -> " << y;
  }
}

TEST(Step, PbcaTwoParticleLaw) {
  const double a = 0.3;
  auto freq = empirical_successors(RingConfig::parse("1010"), {Model::Pbca, a, 0}, 200000, 5);
  const double n = 200000;
  EXPECT_NEAR(freq["0101"], a * a, 5 * std::sqrt(a * a / n));
  EXPECT_NEAR(freq["1001"], a * (1 - a), 5 * std::sqrt(a * (1 - a) / n));
  EXPECT_NEAR(freq["0110"], a * (1 - a), 5 * std::sqrt(a * (1 - a) / n));
  EXPECT_NEAR(freq["1010"], (1 - a) * (1 - a), 5 * std::sqrt((1 - a) * (1 - a) / n));
  EXPECT_EQ(freq.size(), 4u);
}

TEST(Step, PbcaSingleMover) {
  const double a = 0.6;
  auto freq = empirical_successors(RingConfig::parse("1100"), {Model::Pbca, a, 0}, 100000, 6);
  EXPECT_EQ(freq.size(), 2u);
  EXPECT_NEAR(freq["1010"], a, 0.01);
  EXPECT_NEAR(freq["1100"], 1 - a, 0.01);
}

TEST(Step, FrozenRingsDoNotMove) {
  CounterRng rng(1);
  for (auto [model, text] : {std::pair{Model::Pbca, "1111"}, std::pair{Model::Epbca1, "111"},
                             std::pair{Model::Epbca2, "ABBA"}}) {
    const auto x = RingConfig::parse(text);
    const auto r = step(x, {model, 0.9, 0.9}, rng);
    EXPECT_EQ(r.next, x);
    EXPECT_EQ(r.moves, 0u);
  }
}

TEST(Step, AlphabetMismatch) {
  CounterRng rng(1);
  EXPECT_THROW(step(RingConfig::parse("0A0B"), {Model::Pbca, 0.5, 0}, rng), AlphabetError);
  EXPECT_THROW(step(RingConfig::parse("0101"), {Model::Epbca2, 0.5, 0.5}, rng), AlphabetError);
  EXPECT_THROW(step(RingConfig::parse("10"), {Model::Epbca1, 0.5, 0.5}, rng), ParameterError);
  EXPECT_THROW(step(RingConfig::parse("10"), {Model::Pbca, 1.5, 0}, rng), ParameterError);
}

// The simulator is written from the flow equations; the exact chain from the
// pattern rules. Their one-step laws must agree.
TEST(Step, MatchesExactSuccessorLaw) {
  expect_law(RingConfig::parse("1101001000"), {Model::Pbca, 0.35, 0}, 11);
  expect_law(RingConfig::parse("1101001000"), {Model::Epbca1, 0.8, 0.1}, 12);
  expect_law(RingConfig::parse("10110100"), {Model::Epbca1, 0.3, 0.7}, 13);
  expect_law(RingConfig::parse("AB0A00B0"), {Model::Epbca2, 0.4, 0.8}, 14);
  expect_law(RingConfig::parse("B0A0"), {Model::Epbca2, 0.3, 0.6}, 15);
}

TEST(Step, ConservationAndSequencePreservation) {
  std::mt19937_64 gen(42);
  CounterRng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t L = 3 + static_cast<std::size_t>(gen() % 30);
    auto x = testing::random_ring(gen, Alphabet::Species, L);
    auto b = testing::random_ring(gen, Alphabet::Binary, L);
    for (int n = 0; n < 50; ++n) {
      const auto seq = x.particle_sequence();
      const auto nx = step(x, {Model::Epbca2, 0.5, 0.3}, rng).next;
      ASSERT_EQ(nx.count(kA), x.count(kA));
      ASSERT_EQ(nx.count(kB), x.count(kB));
      // Particles never pass: the new sequence is a rotation of the old one.
      const auto nseq = nx.particle_sequence();
      bool rotation = seq.empty();
      for (std::size_t r = 0; r < seq.size() && !rotation; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < seq.size() && ok; ++i) ok = seq[i] == nseq[(i + r) % seq.size()];
        rotation = ok;
      }
      ASSERT_TRUE(rotation);
      x = nx;
      const auto model = n % 2 ? Model::Pbca : Model::Epbca1;
      const auto nb = step(b, {model, 0.7, 0.2}, rng).next;
      ASSERT_EQ(nb.particles(), b.particles());
      b = nb;
    }
  }
}

TEST(Run, DeterministicAndAccounted) {
  const auto x0 = RingConfig::parse("11010000");
  const auto space = enumerate_binary(8, 3);
  RunOptions o;
  o.steps = 5000;
  o.burn_in = 500;
  o.seed = 99;
  o.space = &space;
  const auto a = run(x0, {Model::Pbca, 0.5, 0}, o);
  const auto b = run(x0, {Model::Pbca, 0.5, 0}, o);
  EXPECT_EQ(a.histogram_by_id, b.histogram_by_id);
  EXPECT_EQ(a.total_moves, b.total_moves);
  std::uint64_t total = 0;
  for (auto c : a.histogram_by_id) total += c;
  EXPECT_EQ(total, 4500u);
  EXPECT_GE(a.empirical_flux, 0.0);
  EXPECT_LE(a.empirical_flux, 1.0);
  EXPECT_DOUBLE_EQ(a.empirical_density, 3.0 / 8.0);
  o.seed = 100;
  EXPECT_NE(run(x0, {Model::Pbca, 0.5, 0}, o).total_moves, a.total_moves);
}

TEST(Run, HistogramByLiteralWithoutSpace) {
  RunOptions o;
  o.steps = 100;
  o.histogram = true;
  const auto s = run(RingConfig::parse("A0B00"), {Model::Epbca2, 0.5, 0.5}, o);
  std::uint64_t total = 0;
  for (const auto& [k, c] : s.histogram_by_config) total += c;
  EXPECT_EQ(total, 100u);
}

TEST(Run, FrozenRingHasZeroFlux) {
  RunOptions o;
  o.steps = 1;
  o.burn_in = 0;
  EXPECT_EQ(run(RingConfig::parse("1111"), {Model::Pbca, 0.5, 0}, o).empirical_flux, 0.0);
  o.steps = 10;
  o.burn_in = 9;
  EXPECT_EQ(run(RingConfig::parse("1111"), {Model::Pbca, 0.5, 0}, o).empirical_flux, 0.0);
}

TEST(Run, RejectsBadWindow) {
  RunOptions o;
  o.steps = 10;
  o.burn_in = 10;
  EXPECT_THROW(run(RingConfig::parse("10"), {Model::Pbca, 0.5, 0}, o), ParameterError);
}

TEST(Run, EmpiricalDistributionConvergesToStationary) {
  auto space = std::make_shared<const ConfigSpace>(enumerate_binary(4, 2));
  const ModelParams p{Model::Pbca, 0.5, 0};
  const auto pi = stationary(build_matrix(space, p)).probabilities;
  RunOptions o;
  o.steps = 1'000'000;
  o.burn_in = 0;
  o.seed = 3;
  o.space = space.get();
  const auto s = run(RingConfig::parse("0011"), p, o);
  double tv = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    tv += std::abs(static_cast<double>(s.histogram_by_id[i]) / 1e6 - pi[i]);
  EXPECT_LE(tv / 2, 0.02);
}

TEST(RandomConfigs, CountsAndDeterminism) {
  CounterRng a(7), b(7);
  const auto x = random_binary(50, 17, a);
  EXPECT_EQ(x.particles(), 17u);
  EXPECT_EQ(random_binary(50, 17, b), x);
  const auto y = random_species(30, 7, 15, a);
  EXPECT_EQ(y.count(kA), 7u);
  EXPECT_EQ(y.count(kB), 15u);
}

}  // namespace
}  // namespace pca
