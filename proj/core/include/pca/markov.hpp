#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pca/config_space.hpp"
#include "pca/model.hpp"
#include "pca/numeric.hpp"
#include "pca/ring.hpp"

namespace pca {

// Exact transition structure of the parallel-update chains. Every template
// here is instantiated for S = double and S = Rational (exact arithmetic for
// rational alpha, beta).

template <class S>
struct Transition {
  std::size_t to;
  S prob;
};

// Row-stochastic sparse matrix. rows[i] lists the positive entries of row i.
// `space` is set for matrices over configurations and null for lumped ones;
// `labels` always names the states (configuration literal or class
// representative).
template <class S>
struct TransitionMatrix {
  std::shared_ptr<const ConfigSpace> space;
  std::vector<std::string> labels;
  std::vector<std::vector<Transition<S>>> rows;

  std::size_t size() const noexcept { return rows.size(); }
  S entry(std::size_t i, std::size_t j) const;
};

template <class S>
struct StationaryDist {
  std::vector<S> probabilities;
  double residual = 0.0;  // max_j |(pi P)_j - pi_j|
};

// All successors of x with their probabilities: each subset of the movable
// particles hops, with probability prod(rate) * prod(1 - rate).
template <class S>
std::vector<std::pair<RingConfig, S>> successor_distribution(const RingConfig& x,
                                                             const BasicModelParams<S>& p);

// Throws ClosureError when a successor is outside `space`.
template <class S>
TransitionMatrix<S> build_matrix(std::shared_ptr<const ConfigSpace> space,
                                 const BasicModelParams<S>& p);

// Number of strongly connected components of the positive-probability graph
// with no outgoing edge, and the period of the first such component.
struct RecurrenceInfo {
  int closed_classes = 0;
  int components = 0;
  std::size_t period = 0;
};

template <class S>
RecurrenceInfo recurrence(const TransitionMatrix<S>& mat);

// Unique stationary distribution. Throws ErgodicityError unless the chain has
// exactly one closed class and that class is aperiodic.
//
// double: dense LU for up to kDenseLimit states, power iteration beyond.
// Rational: exact Gaussian elimination.
template <class S>
StationaryDist<S> stationary(const TransitionMatrix<S>& mat);

template <>
StationaryDist<double> stationary(const TransitionMatrix<double>& mat);
template <>
StationaryDist<Rational> stationary(const TransitionMatrix<Rational>& mat);

inline constexpr std::size_t kDenseLimit = 4096;

// Quotient chain over rotation classes of mat.space. Throws
// LumpabilityError when members of a class disagree on class-to-class mass.
template <class S>
TransitionMatrix<S> lump_by_rotation(const TransitionMatrix<S>& mat);

// Stationary distribution of the lumped chain, indexed by class id.
template <class S>
std::vector<S> stationary_class_vector(const TransitionMatrix<S>& lumped);

// Sum of member probabilities per class.
template <class S>
std::vector<S> class_masses(const ConfigSpace& space, const std::vector<S>& pi);

// max_i |sum_j P_ij - 1|
template <class S>
double max_row_defect(const TransitionMatrix<S>& mat);

}  // namespace pca
