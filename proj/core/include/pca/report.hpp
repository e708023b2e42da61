#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pca/conjecture.hpp"
#include "pca/flux.hpp"
#include "pca/gkz.hpp"
#include "pca/markov.hpp"
#include "pca/numeric.hpp"
#include "pca/simulator.hpp"

namespace pca {

// Shortest round-trip decimal for doubles, "p/q" for rationals.
std::string format_number(double v);
std::string format_number(const Rational& v);

// JSON object with keys model, L, m (or mA/mB), alpha, beta, seed, steps,
// burn_in, flux, flux_std_error, moves, density.
std::string sim_stats_json(const SimStats& s);

// "state,count" rows. With a space, states are configuration literals in id
// order (zero counts included).
void write_histogram_csv(std::ostream& os, const SimStats& s, const ConfigSpace* space);

// "row,col,prob" coordinate listing.
template <class S>
void write_matrix_csv(std::ostream& os, const TransitionMatrix<S>& mat);

// "state,probability" rows.
template <class S>
void write_stationary_csv(std::ostream& os, const std::vector<std::string>& labels,
                          const std::vector<S>& probabilities);

// Fundamental-diagram CSV.
inline constexpr const char* kFdHeader = "model,L,alpha,beta,rho,rhoA,rhoB,flux,provenance";
void write_fd_header(std::ostream& os);
void write_fd_row(std::ostream& os, const FluxPoint& p);

// {model, L, counts, params, max_rel_dev, argmax_state, ...}
std::string verification_json(const std::vector<VerificationReport>& reports);

}  // namespace pca
