#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pca/config_space.hpp"
#include "pca/model.hpp"
#include "pca/ring.hpp"
#include "pca/rng.hpp"

namespace pca {

struct StepResult {
  RingConfig next;
  std::size_t moves = 0;
};

// One parallel update. Movability is decided from x alone; one uniform
// variate is drawn per movable particle in ascending site order and the
// particle hops iff the variate is below its rate.
StepResult step(const RingConfig& x, const ModelParams& p, CounterRng& rng);

struct RunOptions {
  std::uint64_t steps = 0;
  std::uint64_t burn_in = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  // Key the histogram by state id in this space (must contain every visited
  // configuration).
  const ConfigSpace* space = nullptr;
  // Without a space, histogram by configuration literal.
  bool histogram = false;
  // Batches for the batch-means standard error of the flux.
  std::size_t batches = 20;
};

struct SimStats {
  Model model = Model::Pbca;
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t length = 0;
  std::size_t particles = 0;  // m, or mA + mB
  std::size_t mA = 0;
  std::size_t mB = 0;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  std::uint64_t burn_in = 0;
  std::uint64_t total_moves = 0;
  double empirical_flux = 0.0;     // moves per site per recorded step
  double flux_std_error = 0.0;     // batch means
  double empirical_density = 0.0;  // particles per site
  std::vector<std::uint64_t> histogram_by_id;
  std::map<std::string, std::uint64_t> histogram_by_config;
  RingConfig final_config;
};

// Iterates `step` from x0. Steps 1..steps are taken; those after burn_in are
// recorded. Throws ParameterError unless steps > burn_in.
SimStats run(const RingConfig& x0, const ModelParams& p, const RunOptions& opts);

// Default burn-in: 10 % of the run.
inline std::uint64_t default_burn_in(std::uint64_t steps) { return steps / 10; }

// Uniformly random ring with the given counts, drawn with rng.
RingConfig random_binary(std::size_t length, std::size_t particles, CounterRng& rng);
RingConfig random_species(std::size_t length, std::size_t mA, std::size_t mB,
                          CounterRng& rng);

}  // namespace pca
