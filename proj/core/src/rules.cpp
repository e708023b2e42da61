#include "pca/rules.hpp"

#include <algorithm>
#include <cctype>

#include "pca/error.hpp"

namespace pca {

std::string_view model_name(Model m) {
  switch (m) {
    case Model::Pbca: return "pbca";
    case Model::Epbca1: return "epbca1";
    case Model::Epbca2: return "epbca2";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "pbca") return Model::Pbca;
  if (lower == "epbca1") return Model::Epbca1;
  if (lower == "epbca2") return Model::Epbca2;
  throw ParameterError("unknown model '" + std::string(name) + "'");
}

Alphabet model_alphabet(Model m) {
  return m == Model::Epbca2 ? Alphabet::Species : Alphabet::Binary;
}

namespace {

template <class S>
void check_unit(const S& v, const char* name) {
  if (v < 0 || v > 1)
    throw ParameterError(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

void validate(const ModelParams& p) {
  check_unit(p.alpha, "alpha");
  if (p.model != Model::Pbca) check_unit(p.beta, "beta");
}

void validate(const RationalParams& p) {
  check_unit(p.alpha, "alpha");
  if (p.model != Model::Pbca) check_unit(p.beta, "beta");
}

void require_interior(const ModelParams& p) {
  if (!(p.alpha > 0.0 && p.alpha < 1.0))
    throw ParameterError("alpha must lie strictly inside (0, 1)");
  if (p.model != Model::Pbca && !(p.beta > 0.0 && p.beta < 1.0))
    throw ParameterError("beta must lie strictly inside (0, 1)");
}

ModelParams to_double(const RationalParams& p) {
  return ModelParams{p.model, to_double(p.alpha), to_double(p.beta)};
}

void require_model_alphabet(const RingConfig& x, Model m) {
  if (x.alphabet() != model_alphabet(m))
    throw AlphabetError(std::string(model_name(m)) + " cannot evolve ring " +
                        x.to_string());
  if (m == Model::Epbca1 && x.size() < 3)
    throw ParameterError("epbca1 needs a ring of length >= 3");
}

std::vector<Mover> movers(const RingConfig& x, Model model) {
  require_model_alphabet(x, model);
  const std::size_t n = x.size();
  std::vector<Mover> out;
  if (n < 2) return out;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint8_t here = x[j];
    if (here == kEmpty || x[(j + 1) % n] != kEmpty) continue;
    switch (model) {
      case Model::Pbca:
        out.push_back({j, HopRate::Alpha});
        break;
      case Model::Epbca1:
        out.push_back({j, x[(j + 2) % n] == kEmpty ? HopRate::Alpha : HopRate::Beta});
        break;
      case Model::Epbca2:
        out.push_back({j, here == kA ? HopRate::Alpha : HopRate::Beta});
        break;
    }
  }
  return out;
}

RingConfig apply_hops(const RingConfig& x, const std::vector<Mover>& mv,
                      std::uint64_t mask) {
  RingConfig y = x;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < mv.size(); ++i) {
    if (!((mask >> i) & 1u)) continue;
    const std::size_t j = mv[i].site;
    y.set((j + 1) % n, x[j]);
    y.set(j, kEmpty);
  }
  return y;
}

}  // namespace pca
