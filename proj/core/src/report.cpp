#include "pca/report.hpp"

#include <json.hpp>

namespace pca {

using nlohmann::json;

std::string format_number(double v) {
  return json(v).dump();
}

std::string format_number(const Rational& v) {
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

namespace {

void put_counts(json& j, Model model, std::size_t m, std::size_t mA, std::size_t mB) {
  if (model == Model::Epbca2) {
    j["mA"] = mA;
    j["mB"] = mB;
  } else {
    j["m"] = m;
  }
}

}  // namespace

std::string sim_stats_json(const SimStats& s) {
  json j;
  j["model"] = std::string(model_name(s.model));
  j["L"] = s.length;
  put_counts(j, s.model, s.particles, s.mA, s.mB);
  j["alpha"] = s.alpha;
  j["beta"] = s.beta;
  j["seed"] = s.seed;
  j["steps"] = s.steps;
  j["burn_in"] = s.burn_in;
  j["flux"] = s.empirical_flux;
  j["flux_std_error"] = s.flux_std_error;
  j["moves"] = s.total_moves;
  j["density"] = s.empirical_density;
  return j.dump(2);
}

void write_histogram_csv(std::ostream& os, const SimStats& s, const ConfigSpace* space) {
  os << "state,count\n";
  if (space && space->size() == s.histogram_by_id.size()) {
    for (std::size_t id = 0; id < space->size(); ++id)
      os << space->config(id).to_string() << ',' << s.histogram_by_id[id] << '\n';
    return;
  }
  for (const auto& [state, count] : s.histogram_by_config) os << state << ',' << count << '\n';
}

template <class S>
void write_matrix_csv(std::ostream& os, const TransitionMatrix<S>& mat) {
  os << "row,col,prob\n";
  for (std::size_t i = 0; i < mat.size(); ++i)
    for (const auto& t : mat.rows[i]) os << i << ',' << t.to << ',' << format_number(t.prob) << '\n';
}

template <class S>
void write_stationary_csv(std::ostream& os, const std::vector<std::string>& labels,
                          const std::vector<S>& probabilities) {
  os << "state,probability\n";
  for (std::size_t i = 0; i < probabilities.size(); ++i)
    os << labels[i] << ',' << format_number(probabilities[i]) << '\n';
}

template void write_matrix_csv(std::ostream&, const TransitionMatrix<double>&);
template void write_matrix_csv(std::ostream&, const TransitionMatrix<Rational>&);
template void write_stationary_csv(std::ostream&, const std::vector<std::string>&,
                                   const std::vector<double>&);
template void write_stationary_csv(std::ostream&, const std::vector<std::string>&,
                                   const std::vector<Rational>&);

void write_fd_header(std::ostream& os) { os << kFdHeader << '\n'; }

void write_fd_row(std::ostream& os, const FluxPoint& p) {
  os << model_name(p.model) << ',';
  if (p.length == 0)
    os << "inf";
  else
    os << p.length;
  os << ',' << format_number(p.alpha) << ',' << format_number(p.beta) << ','
     << format_number(p.rho) << ',' << format_number(p.rhoA) << ',' << format_number(p.rhoB)
     << ',' << format_number(p.flux) << ',' << provenance_name(p.provenance) << '\n';
}

std::string verification_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json j;
    j["model"] = std::string(model_name(r.model));
    j["L"] = r.length;
    json counts;
    put_counts(counts, r.model, r.m, r.mA, r.mB);
    j["counts"] = counts;
    if (!r.initial.empty()) j["initial"] = r.initial;
    json params;
    params["alpha"] = r.alpha;
    if (r.model != Model::Pbca) params["beta"] = r.beta;
    j["params"] = params;
    j["states"] = r.states;
    j["max_rel_dev"] = r.max_rel_dev;
    j["argmax_state"] = r.argmax_state;
    j["stationary_residual"] = r.stationary_residual;
    if (r.exact) j["exact_match"] = r.exact_match;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace pca
