#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pca/ring.hpp"

namespace pca {

// An enumerated state space with rotation classes.
//
// State ids follow a fixed order: classes sorted by their canonical (minimal)
// rotation, and within a class the representative followed by its successive
// left rotations. For (L, m) = (4, 2) this is 0011 0110 1100 1001 0101 1010.
// Immutable after construction.
class ConfigSpace {
 public:
  // Builds ids, index and classes from an arbitrary set of same-length rings.
  // Throws ParameterError on duplicates or mixed alphabets/lengths. A class
  // holds the members of the set sharing a minimal rotation; only a frozen
  // species ring yields a class that is not rotation-closed.
  static ConfigSpace from_configs(std::vector<RingConfig> configs);

  std::size_t size() const noexcept { return configs_.size(); }
  std::size_t length() const noexcept { return length_; }
  Alphabet alphabet() const noexcept { return alphabet_; }

  const RingConfig& config(std::size_t id) const { return configs_[id]; }
  const std::vector<RingConfig>& configs() const noexcept { return configs_; }

  std::optional<std::size_t> find(const RingConfig& x) const;
  std::size_t id_of(const RingConfig& x) const;  // throws ClosureError

  std::size_t class_count() const noexcept { return class_members_.size(); }
  std::size_t class_of(std::size_t id) const { return class_of_[id]; }
  const std::vector<std::size_t>& class_members(std::size_t c) const {
    return class_members_[c];
  }
  // First member of class c; the minimal rotation whenever the class is
  // rotation-closed.
  const RingConfig& representative(std::size_t c) const {
    return configs_[class_members_[c].front()];
  }

 private:
  std::size_t length_ = 0;
  Alphabet alphabet_ = Alphabet::Binary;
  std::vector<RingConfig> configs_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> class_members_;
};

// All C(L, m) binary rings with m particles.
ConfigSpace enumerate_binary(std::size_t length, std::size_t particles);

// Closure of {x0} under positive-probability two-species steps. Every member
// keeps the particle counts and the cyclic particle order of x0.
ConfigSpace enumerate_species_reachable(const RingConfig& x0);

// Number of species rings with the cyclic particle sequence of x0 and the same
// number of empty sites, counted combinatorially (no enumeration).
std::uint64_t species_space_size(const RingConfig& x0);

}  // namespace pca
