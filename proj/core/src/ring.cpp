#include "pca/ring.hpp"

#include <algorithm>

#include "pca/error.hpp"

namespace pca {

namespace {

std::uint8_t max_code(Alphabet a) { return a == Alphabet::Binary ? kOne : kB; }

void require_binary(const RingConfig& x, const char* op) {
  if (x.alphabet() != Alphabet::Binary)
    throw AlphabetError(std::string(op) + ": binary ring required, got " +
                        x.to_string());
}

}  // namespace

RingConfig::RingConfig(Alphabet alphabet, std::vector<std::uint8_t> cells)
    : alphabet_(alphabet), cells_(std::move(cells)) {
  if (cells_.empty()) throw ParameterError("ring length must be >= 1");
  const auto top = max_code(alphabet_);
  for (auto c : cells_)
    if (c > top) throw AlphabetError("cell value outside ring alphabet");
}

RingConfig RingConfig::parse(std::string_view text) {
  const bool species = text.find_first_of("AB") != std::string_view::npos;
  return parse(text, species ? Alphabet::Species : Alphabet::Binary);
}

RingConfig RingConfig::parse(std::string_view text, Alphabet alphabet) {
  std::vector<std::uint8_t> cells;
  cells.reserve(text.size());
  for (char ch : text) {
    if (ch == '0') {
      cells.push_back(kEmpty);
    } else if (alphabet == Alphabet::Binary && ch == '1') {
      cells.push_back(kOne);
    } else if (alphabet == Alphabet::Species && ch == 'A') {
      cells.push_back(kA);
    } else if (alphabet == Alphabet::Species && ch == 'B') {
      cells.push_back(kB);
    } else {
      throw AlphabetError("unexpected character '" + std::string(1, ch) +
                          "' in ring literal \"" + std::string(text) + "\"");
    }
  }
  return RingConfig(alphabet, std::move(cells));
}

std::size_t RingConfig::count(std::uint8_t value) const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), value));
}

std::vector<std::uint8_t> RingConfig::particle_sequence() const {
  std::vector<std::uint8_t> seq;
  for (auto c : cells_)
    if (c != kEmpty) seq.push_back(c);
  return seq;
}

std::string RingConfig::to_string() const {
  std::string s;
  s.reserve(cells_.size());
  for (auto c : cells_) {
    if (c == kEmpty)
      s.push_back('0');
    else if (alphabet_ == Alphabet::Binary)
      s.push_back('1');
    else
      s.push_back(c == kA ? 'A' : 'B');
  }
  return s;
}

RingConfig RingConfig::rotated(std::size_t k) const {
  RingConfig r = *this;
  const std::size_t n = cells_.size();
  std::rotate_copy(cells_.begin(), cells_.begin() + static_cast<std::ptrdiff_t>(k % n),
                   cells_.end(), r.cells_.begin());
  return r;
}

std::size_t count_10(const RingConfig& x) {
  require_binary(x, "count_10");
  const std::size_t n = x.size();
  std::size_t c = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (x[j] == kOne && x[(j + 1) % n] == kEmpty) ++c;
  return c;
}

Counts100 count_100_101(const RingConfig& x) {
  require_binary(x, "count_100_101");
  const std::size_t n = x.size();
  if (n < 3) throw ParameterError("count_100_101: ring length must be >= 3");
  Counts100 out;
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] != kOne || x[(j + 1) % n] != kEmpty) continue;
    if (x[(j + 2) % n] == kEmpty)
      ++out.c100;
    else
      ++out.c101;
  }
  return out;
}

SpeciesTally tally_species(const RingConfig& x) {
  if (x.alphabet() != Alphabet::Species)
    throw AlphabetError("tally_species: species ring required, got " + x.to_string());
  const std::size_t n = x.size();
  SpeciesTally t;
  t.mA = x.count(kA);
  t.mB = x.count(kB);
  if (t.mA + t.mB == 0) throw ParameterError("tally_species: ring has no particle");

  // Start just after some particle so every empty run is seen with its owner.
  std::size_t start = 0;
  while (x[start] == kEmpty) ++start;
  std::uint8_t owner = x[start];
  for (std::size_t step = 1; step <= n; ++step) {
    const std::size_t j = (start + step) % n;
    const std::uint8_t c = x[j];
    if (c == kEmpty) {
      const bool opens_run = x.at(static_cast<std::ptrdiff_t>(j) - 1) != kEmpty;
      if (owner == kA) {
        ++t.nA;
        if (opens_run) ++t.kA;
      } else {
        ++t.nB;
        if (opens_run) ++t.kB;
      }
    } else {
      owner = c;
    }
  }
  return t;
}

// Booth's least-rotation algorithm.
RingConfig canonical_rotation(const RingConfig& x) {
  const auto& s = x.cells();
  const std::size_t n = s.size();
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const std::uint8_t sj = s[j % n];
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n])
        k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return x.rotated(k % n);
}

std::size_t rotation_period(const RingConfig& x) {
  const std::size_t n = x.size();
  for (std::size_t k = 1; k < n; ++k)
    if (n % k == 0 && x.rotated(k) == x) return k;
  return n;
}

bool packable(Alphabet alphabet, std::size_t length) noexcept {
  return alphabet == Alphabet::Binary ? length <= 64 : length <= 32;
}

std::uint64_t pack(const RingConfig& x) {
  if (!packable(x.alphabet(), x.size()))
    throw ParameterError("ring too long for a 64-bit key: L=" + std::to_string(x.size()));
  const unsigned width = x.alphabet() == Alphabet::Binary ? 1 : 2;
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    key |= static_cast<std::uint64_t>(x[j]) << (width * j);
  return key;
}

RingConfig unpack(std::uint64_t key, Alphabet alphabet, std::size_t length) {
  const unsigned width = alphabet == Alphabet::Binary ? 1 : 2;
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  std::vector<std::uint8_t> cells(length);
  for (std::size_t j = 0; j < length; ++j)
    cells[j] = static_cast<std::uint8_t>((key >> (width * j)) & mask);
  return RingConfig(alphabet, std::move(cells));
}

}  // namespace pca
