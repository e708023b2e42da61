#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pca {

enum class Alphabet : std::uint8_t {
  Binary,   // {0, 1}
  Species,  // {0, A, B}
};

// Cell codes. Binary rings use {kEmpty, kOne}; species rings use
// {kEmpty, kA, kB}. kOne and kA share a code so a B-free species ring and the
// corresponding binary ring have identical cell vectors.
inline constexpr std::uint8_t kEmpty = 0;
inline constexpr std::uint8_t kOne = 1;
inline constexpr std::uint8_t kA = 1;
inline constexpr std::uint8_t kB = 2;

// A configuration on a periodic ring of L sites. Site 0 is the leftmost
// character of the textual form; particles move towards higher indices and
// site L-1 is followed by site 0.
class RingConfig {
 public:
  RingConfig() = default;
  RingConfig(Alphabet alphabet, std::vector<std::uint8_t> cells);

  // "0011", "00AABAAB". An alphabet is inferred: any 'A'/'B' makes a species
  // ring, otherwise binary. Throws AlphabetError on other characters.
  static RingConfig parse(std::string_view text);
  static RingConfig parse(std::string_view text, Alphabet alphabet);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return cells_.size(); }
  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

  // Cyclic access; any integer index is reduced mod L.
  std::uint8_t at(std::ptrdiff_t j) const noexcept {
    const auto n = static_cast<std::ptrdiff_t>(cells_.size());
    std::ptrdiff_t r = j % n;
    if (r < 0) r += n;
    return cells_[static_cast<std::size_t>(r)];
  }
  std::uint8_t operator[](std::size_t j) const noexcept { return cells_[j]; }
  void set(std::size_t j, std::uint8_t v) noexcept { cells_[j] = v; }

  std::size_t count(std::uint8_t value) const noexcept;
  std::size_t particles() const noexcept { return size() - count(kEmpty); }

  // Cyclic particle sequence read from site 0 (empties dropped), e.g.
  // "0AA00BB0" -> {A, A, B, B}.
  std::vector<std::uint8_t> particle_sequence() const;

  std::string to_string() const;

  // Left rotation by k: result[j] = this[j + k].
  RingConfig rotated(std::size_t k) const;

  friend bool operator==(const RingConfig&, const RingConfig&) = default;
  friend auto operator<=>(const RingConfig& a, const RingConfig& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  Alphabet alphabet_ = Alphabet::Binary;
  std::vector<std::uint8_t> cells_;
};

struct Counts100 {
  std::size_t c100 = 0;
  std::size_t c101 = 0;
  friend bool operator==(const Counts100&, const Counts100&) = default;
};

// Sufficient statistics of the two-species steady state.
struct SpeciesTally {
  std::size_t kA = 0;  // A immediately followed by an empty site
  std::size_t kB = 0;
  std::size_t nA = 0;  // empty sites whose nearest particle to the left is A
  std::size_t nB = 0;
  std::size_t mA = 0;
  std::size_t mB = 0;
  friend bool operator==(const SpeciesTally&, const SpeciesTally&) = default;
};

// Number of cyclic "10" patterns. Binary rings only.
std::size_t count_10(const RingConfig& x);

// Cyclic "100" and "101" pattern counts. Binary rings with L >= 3.
Counts100 count_100_101(const RingConfig& x);

// Species tally. Throws on binary rings and on all-empty rings.
SpeciesTally tally_species(const RingConfig& x);

// Lexicographically minimal rotation (0 < 1, 0 < A < B).
RingConfig canonical_rotation(const RingConfig& x);

// Smallest k > 0 with x.rotated(k) == x.
std::size_t rotation_period(const RingConfig& x);

// 64-bit packed key: one bit per site for binary rings (L <= 64), two bits
// per site for species rings (L <= 32). Throws ParameterError beyond that.
std::uint64_t pack(const RingConfig& x);
RingConfig unpack(std::uint64_t key, Alphabet alphabet, std::size_t length);
bool packable(Alphabet alphabet, std::size_t length) noexcept;

}  // namespace pca
