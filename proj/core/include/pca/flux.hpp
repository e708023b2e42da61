#pragma once

#include <cstddef>
#include <string_view>

#include "pca/config_space.hpp"
#include "pca/model.hpp"
#include "pca/numeric.hpp"

namespace pca {

enum class Provenance { MonteCarlo, ExactChain, ClosedForm, Limit };

std::string_view provenance_name(Provenance p);

// One point of a fundamental diagram. length == 0 stands for the infinite
// ring.
struct FluxPoint {
  Model model = Model::Pbca;
  std::size_t length = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double rho = 0.0;
  double rhoA = 0.0;
  double rhoB = 0.0;
  double flux = 0.0;
  Provenance provenance = Provenance::ClosedForm;
};

// Steady-state mean flux on a ring of L sites with m particles,
//   Q = (alpha/L) sum_k k N(k) lambda^k / sum_k N(k) lambda^k,  lambda = 1/(1-alpha),
// accumulated in log space. Q = 0 for m in {0, L}.
FluxPoint flux_pbca(std::size_t L, std::size_t m, double alpha);
Rational flux_pbca_exact(std::size_t L, std::size_t m, const Rational& alpha);

// Expected (alpha #100 + beta #101)/L under the product weights, including
// the rings without any "100" pattern.
FluxPoint flux_epbca1(std::size_t L, std::size_t m, double alpha, double beta);

// Direct sum over an enumerated two-species space.
FluxPoint flux_epbca2(const ConfigSpace& space, double alpha, double beta);
// Grouped sum over (kA, kB, nA, nB) using the tally multiplicities; valid for
// any particle order with the given counts.
FluxPoint flux_epbca2(std::size_t L, std::size_t mA, std::size_t mB, double alpha, double beta);

// Infinite-ring PBCA diagram (1 - sqrt(1 - 4 alpha rho (1 - rho))) / 2.
FluxPoint flux_limit_pbca(double rho, double alpha);

}  // namespace pca
