#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pca/config_space.hpp"
#include "pca/model.hpp"
#include "pca/numeric.hpp"
#include "pca/ring.hpp"

namespace pca {

// Unnormalized steady-state weight of a configuration.
struct ConjectureWeight {
  double log_weight = 0.0;
  std::optional<Rational> rational_weight;
};

// (1/(1-alpha))^{#10}
ConjectureWeight weight_pbca(const RingConfig& x, double alpha);
// (alpha(1-beta)/((1-alpha)^2 beta))^{#100} * (alpha/((1-alpha) beta))^{#101}
ConjectureWeight weight_epbca1(const RingConfig& x, double alpha, double beta);
// (1-beta)^{nB-kB} / (1-alpha)^{kA+nB} * (alpha/beta)^{nB}
ConjectureWeight weight_epbca2(const RingConfig& x, double alpha, double beta);

ConjectureWeight conjecture_weight(const RingConfig& x, const ModelParams& p);
// Exact weight; the rational_weight field is always set.
ConjectureWeight conjecture_weight(const RingConfig& x, const RationalParams& p);

// Tally-level weights, shared with the flux formulas.
double log_weight_pbca(std::size_t c10, double alpha);
double log_weight_epbca1(std::size_t c100, std::size_t c101, double alpha, double beta);
double log_weight_epbca2(std::size_t kA, std::size_t kB, std::size_t nB, double alpha,
                         double beta);

// Normalized conjecture probabilities over every state of `space`.
std::vector<double> conjecture_distribution(const ConfigSpace& space, const ModelParams& p);
std::vector<Rational> conjecture_distribution(const ConfigSpace& space, const RationalParams& p);

// Number of binary rings of length L with m particles and k "10" patterns:
//   L (m-1)! (L-m-1)! / ((m-k)! (k-1)! k! (L-m-k)!).
// Requires 0 < m < L; k outside [1, min(m, L-m)] gives 0.
BigInt count_N_pbca(std::size_t L, std::size_t m, std::size_t k);

// Rings with k1 "100" and k2 "101" patterns, k1 >= 1:
//   L (L-m-k1-k2-1)! (m-1)! / (k1! k2! (L-m-2k1-k2)! (k1-1)! (m-k1-k2)!).
// Zero outside the region where every factorial argument is nonnegative,
// in particular for k1 = 0 (pole of 1/(k1-1)!).
BigInt count_N_epbca1(std::size_t L, std::size_t m, std::size_t k1, std::size_t k2);

// Rings with no "100" pattern, i.e. every run of empties has length one. The
// closed form above misses this family. All of them have #101 = L - m.
// Equals (L/m) C(m, L-m); zero when L - m > m.
BigInt count_k1_zero_epbca1(std::size_t L, std::size_t m);

// Two-species tally multiplicity up to the space-dependent factor D:
//   C(mA, kA) C(nA-1, kA-1) C(mB, kB) C(nB-1, kB-1)
// with C(-1, -1) = 1 (no empties owned by that species).
BigInt count_N_epbca2_relative(std::size_t mA, std::size_t mB, std::size_t kA,
                               std::size_t kB, std::size_t nA, std::size_t nB);

struct VerificationReport {
  Model model = Model::Pbca;
  std::size_t length = 0;
  std::size_t m = 0;
  std::size_t mA = 0;
  std::size_t mB = 0;
  std::string initial;  // species seed configuration, if any
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t states = 0;
  double max_rel_dev = 0.0;
  std::string argmax_state;
  double stationary_residual = 0.0;
  bool exact = false;        // rational mode
  bool exact_match = false;  // rational mode: identical vectors
};

// Compares normalized conjecture weights with the exact stationary
// distribution of the chain on `space`.
VerificationReport verify_conjecture(std::shared_ptr<const ConfigSpace> space,
                                     const ModelParams& p);
VerificationReport verify_conjecture(std::shared_ptr<const ConfigSpace> space,
                                     const RationalParams& p);

}  // namespace pca
