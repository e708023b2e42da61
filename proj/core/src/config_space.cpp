#include "pca/config_space.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pca/error.hpp"
#include "pca/numeric.hpp"
#include "pca/rules.hpp"

namespace pca {

ConfigSpace ConfigSpace::from_configs(std::vector<RingConfig> configs) {
  ConfigSpace space;
  if (configs.empty()) return space;
  space.length_ = configs.front().size();
  space.alphabet_ = configs.front().alphabet();
  if (!packable(space.alphabet_, space.length_))
    throw ParameterError("state space enumeration limited to L <= 64 (binary) or 32 (species)");

  std::set<std::uint64_t> keys;
  std::map<RingConfig, std::vector<RingConfig>> by_class;
  for (auto& x : configs) {
    if (x.size() != space.length_ || x.alphabet() != space.alphabet_)
      throw ParameterError("configurations differ in length or alphabet");
    if (!keys.insert(pack(x)).second)
      throw ParameterError("duplicate configuration " + x.to_string());
    by_class[canonical_rotation(x)].push_back(std::move(x));
  }

  for (auto& [rep, members] : by_class) {
    const std::size_t c = space.class_members_.size();
    std::vector<std::size_t> ids;
    const std::size_t period = rotation_period(rep);
    for (std::size_t k = 0; k < period; ++k) {
      RingConfig r = rep.rotated(k);
      if (!keys.count(pack(r))) continue;
      ids.push_back(space.configs_.size());
      space.configs_.push_back(std::move(r));
      space.class_of_.push_back(c);
    }
    space.class_members_.push_back(std::move(ids));
  }
  for (std::size_t id = 0; id < space.configs_.size(); ++id)
    space.index_.emplace(pack(space.configs_[id]), id);
  return space;
}

std::optional<std::size_t> ConfigSpace::find(const RingConfig& x) const {
  if (x.size() != length_ || x.alphabet() != alphabet_) return std::nullopt;
  auto it = index_.find(pack(x));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ConfigSpace::id_of(const RingConfig& x) const {
  auto id = find(x);
  if (!id) throw ClosureError("configuration " + x.to_string() + " is not in the state space");
  return *id;
}

ConfigSpace enumerate_binary(std::size_t length, std::size_t particles) {
  if (length == 0) throw ParameterError("ring length must be >= 1");
  if (particles > length)
    throw ParameterError("particle count m=" + std::to_string(particles) +
                         " exceeds ring length L=" + std::to_string(length));
  if (length > 64) throw ParameterError("enumerate_binary: L must be <= 64");

  std::vector<std::uint8_t> cells(length, kEmpty);
  std::fill(cells.end() - static_cast<std::ptrdiff_t>(particles), cells.end(), kOne);
  std::vector<RingConfig> configs;
  do {
    configs.emplace_back(Alphabet::Binary, cells);
  } while (std::next_permutation(cells.begin(), cells.end()));
  return ConfigSpace::from_configs(std::move(configs));
}

ConfigSpace enumerate_species_reachable(const RingConfig& x0) {
  if (x0.alphabet() != Alphabet::Species)
    throw AlphabetError("enumerate_species_reachable: species ring required");
  if (x0.particles() == 0)
    throw ParameterError("enumerate_species_reachable: ring has no particle");
  if (!packable(Alphabet::Species, x0.size()))
    throw ParameterError("enumerate_species_reachable: L must be <= 32");

  std::unordered_map<std::uint64_t, bool> seen;
  std::vector<RingConfig> found;
  std::deque<RingConfig> frontier;
  seen.emplace(pack(x0), true);
  found.push_back(x0);
  frontier.push_back(x0);
  while (!frontier.empty()) {
    RingConfig x = std::move(frontier.front());
    frontier.pop_front();
    const auto mv = movers(x, Model::Epbca2);
    // Every hop subset has positive probability for 0 < alpha, beta < 1, so
    // the support is all 2^v subsets; single hops already generate it.
    for (std::size_t i = 0; i < mv.size(); ++i) {
      RingConfig y = apply_hops(x, mv, std::uint64_t{1} << i);
      if (seen.emplace(pack(y), true).second) {
        found.push_back(y);
        frontier.push_back(std::move(y));
      }
    }
  }
  return ConfigSpace::from_configs(std::move(found));
}

std::uint64_t species_space_size(const RingConfig& x0) {
  const auto seq = x0.particle_sequence();
  const std::size_t M = seq.size();
  const std::size_t Z = x0.size() - M;
  if (M == 0) return 1;
  std::size_t period = M;
  for (std::size_t p = 1; p < M; ++p) {
    if (M % p) continue;
    bool same = true;
    for (std::size_t i = 0; i < M && same; ++i) same = seq[i] == seq[(i + p) % M];
    if (same) {
      period = p;
      break;
    }
  }
  // L * C(Z + M - 1, M - 1) placements of (first particle, gap vector), each
  // configuration hit M / period times.
  const BigInt placements =
      BigInt(x0.size()) * binomial(static_cast<long long>(Z + M - 1), static_cast<long long>(M - 1));
  return static_cast<std::uint64_t>(placements * period / M);
}

}  // namespace pca
