#pragma once

#include <string>
#include <vector>

#include "pca/config_space.hpp"
#include "pca/markov.hpp"
#include "pca/model.hpp"
#include "pca/numeric.hpp"

namespace pca::testing {

// A known class eigenvector: class representatives (any rotation) and
// the class masses, member count times weight, up to a common factor.
struct ReferenceVector {
  std::string name;
  Model model;
  std::size_t L = 0;
  std::size_t m = 0;
  std::string seed;  // species start configuration
  std::vector<std::string> reps;
  std::vector<Rational> masses;
};

inline std::vector<ReferenceVector> reference_vectors(const Rational& a, const Rational& b) {
  const Rational c = 1 - a;
  const Rational d = 1 - b;
  std::vector<ReferenceVector> out;

  out.push_back({"epbca1 L=9 m=3", Model::Epbca1, 9, 3, "",
                 {"000000111", "000001011", "000001101", "000010011", "000010101", "000011001",
                  "000100011", "000100101", "000101001", "001001001"},
                 {3 * c * c * c * c * b * b / (a * a * d * d), 3 * c * c * c * b / (a * d * d),
                  3 * c * c * c * b / (a * d * d), 3 * c * c * b / (a * d), 3 * c * c / (d * d),
                  3 * c * c * b / (a * d), 3 * c * c * b / (a * d), 3 * c / d, 3 * c / d, Rational(1)}});

  const Rational mid = 4 * c * b * b * d / (a * a);
  out.push_back({"epbca1 L=8 m=4", Model::Epbca1, 8, 4, "",
                 {"00001111", "00010111", "00011011", "00011101", "00100111", "00101011", "00101101",
                  "00110011", "00110101", "01010101"},
                 {4 * c * c * b * b * b * d / (a * a * a), mid, mid, mid, 4 * b * b * d * d / (a * a),
                  4 * b * d / a, 4 * b * d / a, 2 * b * b * d * d / (a * a), 4 * b * d / a, Rational(1)}});

  out.push_back({"epbca2 |Omega|=84", Model::Epbca2, 8, 0, "AABAAB00",
                 {"00AABAAB", "0A0ABAAB", "0AA0BAAB", "0AAB0AAB", "0AABA0AB", "0AABAA0B", "A00ABAAB",
                  "A0A0BAAB", "A0ABA0AB", "A0ABAA0B", "AA00BAAB", "AA0BAA0B"},
                 {8 * a * a * d / (c * c * b * b), 8 * a / (c * c * b), 8 * a / (c * c * b),
                  4 * a * a / (c * c * b * b), 8 * a / (c * c * b), 8 * a / (c * c * b), 8 / c, 8 / (c * c),
                  4 / (c * c), 8 / (c * c), 8 / c, 4 / (c * c)}});

  const Rational u1 = 1 / c, u2 = 1 / (c * c), u3 = 1 / (c * c * c);
  const Rational h2 = a / (c * c * b), h3 = a / (c * c * c * b);
  const Rational g3 = a * a * d / (c * c * c * b * b);
  const Rational top = a * a * a * d * d / (c * c * c * b * b * b);
  out.push_back({"epbca2 |Omega|=140", Model::Epbca2, 7, 0, "AABA000",
                 {"000AABA", "00A0ABA", "00AA0BA", "00AAB0A", "0A00ABA", "0A0A0BA", "0A0AB0A",
                  "0AA00BA", "0AA0B0A", "0AAB00A", "A000ABA", "A00A0BA", "A00AB0A", "A0A00BA",
                  "A0A0B0A", "A0AB00A", "AA000BA", "AA00B0A", "AA0B00A", "AAB000A"},
                 {u1, u2, u2, h2, u2, u3, h3, u2, h3, g3, u1, u2, h2, u2, h3, g3, u1, h2, g3, top}});
  return out;
}

inline std::shared_ptr<const ConfigSpace> space_for(const ReferenceVector& v) {
  if (v.model == Model::Epbca2)
    return std::make_shared<const ConfigSpace>(enumerate_species_reachable(RingConfig::parse(v.seed)));
  return std::make_shared<const ConfigSpace>(enumerate_binary(v.L, v.m));
}

// Class id of each listed representative, via its minimal rotation.
inline std::vector<std::size_t> reference_class_ids(const ConfigSpace& space, const ReferenceVector& v) {
  std::vector<std::size_t> ids;
  for (const auto& r : v.reps) ids.push_back(space.class_of(space.id_of(canonical_rotation(RingConfig::parse(r)))));
  return ids;
}

}  // namespace pca::testing
