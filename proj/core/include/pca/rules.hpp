#pragma once

#include <cstddef>
#include <vector>

#include "pca/model.hpp"
#include "pca/ring.hpp"

namespace pca {

enum class HopRate { Alpha, Beta };

// A particle that may hop one site right in the current step.
struct Mover {
  std::size_t site;
  HopRate rate;
};

// Movable particles of x under the model's pattern rules, ascending by site.
// Decisions read only the current configuration (parallel update).
std::vector<Mover> movers(const RingConfig& x, Model model);

// Apply a set of hops selected by bit i of `mask` for movers[i].
RingConfig apply_hops(const RingConfig& x, const std::vector<Mover>& movers,
                      std::uint64_t mask);

}  // namespace pca
