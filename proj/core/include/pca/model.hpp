#pragma once

#include <string>
#include <string_view>

#include "pca/numeric.hpp"
#include "pca/ring.hpp"

namespace pca {

enum class Model {
  Pbca,    // 10 -> 01 with probability alpha
  Epbca1,  // 100 -> 010 with alpha, 101 -> 011 with beta
  Epbca2,  // A0 -> 0A with alpha, B0 -> 0B with beta
};

std::string_view model_name(Model m);
Model parse_model(std::string_view name);
Alphabet model_alphabet(Model m);

// Hopping probabilities. beta is ignored by Pbca. S is double or Rational.
template <class S>
struct BasicModelParams {
  Model model = Model::Pbca;
  S alpha{0};
  S beta{0};
};

using ModelParams = BasicModelParams<double>;
using RationalParams = BasicModelParams<Rational>;

// Throws ParameterError unless 0 <= alpha, beta <= 1.
void validate(const ModelParams& p);
void validate(const RationalParams& p);

// Throws ParameterError unless the probabilities the closed-form weights
// divide by are strictly inside (0, 1).
void require_interior(const ModelParams& p);

ModelParams to_double(const RationalParams& p);

// Throws AlphabetError when x cannot be evolved by the model.
void require_model_alphabet(const RingConfig& x, Model m);

}  // namespace pca
