#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pca/config_space.hpp"
#include "pca/conjecture.hpp"
#include "pca/error.hpp"
#include "pca/flux.hpp"
#include "pca/gkz.hpp"
#include "pca/markov.hpp"
#include "pca/parallel.hpp"
#include "pca/report.hpp"
#include "pca/simulator.hpp"

using namespace pca;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitErgodicity = 4;

struct JobSpec {
  std::string model = "pbca";
  std::size_t L = 0;
  std::optional<std::size_t> m, mA, mB;
  std::string init;
  std::string alpha = "0.5";
  std::string beta = "0.5";
  std::optional<std::uint64_t> seed;
  std::uint64_t steps = 0;
  std::optional<std::uint64_t> burn_in;
  bool from_zero = false;
  std::string out = "-";
  std::string format;
  bool rational = false;
  bool lump = false;
  std::string matrix_out;
  std::string hist_out;
  std::size_t max_L = 0;
  std::vector<std::string> inits;
  std::size_t random_inits = 0;
  double tol = 1e-9;
  bool limit = false;
  bool mc_overlay = false;
  std::string grid;
  std::size_t points = 101;
  std::optional<double> rho;
  std::vector<double> lambdas{0.5, 1.0, 1.5, 5.0};
};

// Exact value of a decimal ("0.8", "-1.25e-2") or fraction ("4/5") literal.
Rational parse_exact(const std::string& text) {
  const auto bad = [&] { return ParameterError("not a number: '" + text + "'"); };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    try {
      const auto integer = [&](std::string t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) throw bad();
        t.erase(0, std::min(t.find_first_not_of('0'), t.size() - 1));
        return BigInt(t);
      };
      const BigInt num = integer(text.substr(0, slash));
      const BigInt den = integer(text.substr(slash + 1));
      if (den == 0) throw bad();
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      throw bad();
    }
  }
  std::string mant = text;
  long long exp10 = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    mant = text.substr(0, e);
    try {
      exp10 = std::stoll(text.substr(e + 1));
    } catch (const std::exception&) {
      throw bad();
    }
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant.erase(0, 1);
  }
  std::string digits;
  bool seen_point = false, any = false;
  for (char c : mant) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      any = true;
      if (seen_point) --exp10;
    } else {
      throw bad();
    }
  }
  if (!any) throw bad();
  // A leading zero would make the big-integer parser read octal.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational r{BigInt(digits)};
  BigInt scale = 1;
  for (long long i = 0; i < std::llabs(exp10); ++i) scale *= 10;
  if (exp10 >= 0)
    r *= scale;
  else
    r /= scale;
  return neg ? -r : r;
}

RationalParams rational_params(const JobSpec& j) {
  RationalParams p{parse_model(j.model), parse_exact(j.alpha), parse_exact(j.beta)};
  validate(p);
  return p;
}

ModelParams double_params(const JobSpec& j) { return to_double(rational_params(j)); }

// Writes `content` to path, or stdout for "-". Goes through a temporary file
// so a failed run never leaves a partial output behind.
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw ParameterError("cannot write " + path);
    os << content;
    if (!os.flush()) throw ParameterError("cannot write " + path);
  }
  std::filesystem::rename(tmp, target);
}

std::string format_or(const JobSpec& j, const std::string& fallback) {
  const std::string f = j.format.empty() ? fallback : j.format;
  if (f != "csv" && f != "json") throw ParameterError("--format must be csv or json");
  return f;
}

// Initial ring from --init, or a seeded random ring with the given counts.
RingConfig initial_config(const JobSpec& j, Model model, CounterRng& rng) {
  if (!j.init.empty()) {
    auto x = RingConfig::parse(j.init);
    require_model_alphabet(x, model);
    return x;
  }
  if (j.L == 0) throw ParameterError("give --init or -L with particle counts");
  if (model == Model::Epbca2) {
    if (!j.mA || !j.mB) throw ParameterError("epbca2 needs --mA and --mB (or --init)");
    if (*j.mA + *j.mB > j.L) throw ParameterError("mA + mB exceeds L");
    return random_species(j.L, *j.mA, *j.mB, rng);
  }
  if (!j.m) throw ParameterError(std::string(model_name(model)) + " needs -m (or --init)");
  if (*j.m > j.L) throw ParameterError("m exceeds L");
  return random_binary(j.L, *j.m, rng);
}

std::shared_ptr<const ConfigSpace> state_space(const JobSpec& j, Model model) {
  if (model == Model::Epbca2) {
    if (j.init.empty()) throw ParameterError("epbca2 state spaces are given by --init");
    const auto x0 = RingConfig::parse(j.init);
    require_model_alphabet(x0, model);
    return std::make_shared<const ConfigSpace>(enumerate_species_reachable(x0));
  }
  std::size_t L = j.L, m = j.m.value_or(0);
  if (!j.init.empty()) {
    const auto x0 = RingConfig::parse(j.init);
    require_model_alphabet(x0, model);
    L = x0.size();
    m = x0.particles();
  } else if (!j.m || L == 0) {
    throw ParameterError("give -L and -m (or --init)");
  }
  if (m > L) throw ParameterError("m exceeds L");
  if (model == Model::Epbca1 && L < 3) throw ParameterError("epbca1 needs L >= 3");
  return std::make_shared<const ConfigSpace>(enumerate_binary(L, m));
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const JobSpec& j) {
  if (!j.seed) throw ParameterError("simulate requires --seed");
  if (j.steps == 0) throw ParameterError("simulate requires --steps > 0");
  const auto p = double_params(j);
  CounterRng init_rng(*j.seed, 1);
  const auto x0 = initial_config(j, p.model, init_rng);

  RunOptions opts;
  opts.steps = j.steps;
  opts.burn_in = j.from_zero ? 0 : j.burn_in.value_or(default_burn_in(j.steps));
  opts.seed = *j.seed;

  std::optional<ConfigSpace> space;
  if (!j.hist_out.empty()) {
    // Index small binary spaces by id so empty states are listed too.
    if (x0.alphabet() == Alphabet::Binary && x0.size() <= 24)
      space = enumerate_binary(x0.size(), x0.particles());
    else
      opts.histogram = true;
    if (space) opts.space = &*space;
  }
  const auto stats = run(x0, p, opts);

  std::string hist;
  if (!j.hist_out.empty()) {
    std::ostringstream os;
    write_histogram_csv(os, stats, space ? &*space : nullptr);
    hist = os.str();
  }
  std::string body;
  if (format_or(j, "json") == "json") {
    auto doc = json::parse(sim_stats_json(stats));
    doc["initial"] = x0.to_string();
    doc["final"] = stats.final_config.to_string();
    body = doc.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "model,L,alpha,beta,seed,steps,burn_in,flux,flux_std_error,moves,density\n"
       << model_name(stats.model) << ',' << stats.length << ',' << format_number(stats.alpha) << ','
       << format_number(stats.beta) << ',' << stats.seed << ',' << stats.steps << ',' << stats.burn_in
       << ',' << format_number(stats.empirical_flux) << ',' << format_number(stats.flux_std_error)
       << ',' << stats.total_moves << ',' << format_number(stats.empirical_density) << '\n';
    body = os.str();
  }
  if (!j.hist_out.empty()) emit(j.hist_out, hist);
  emit(j.out, body);
  return kExitOk;
}

// ------------------------------------------------------------------- exact

template <class S>
std::string exact_output(const JobSpec& j, const TransitionMatrix<S>& mat, const std::string& fmt) {
  std::vector<std::string> labels;
  std::vector<S> probs;
  if (j.lump) {
    const auto lumped = lump_by_rotation(mat);
    labels = lumped.labels;
    probs = stationary_class_vector(lumped);
  } else {
    const auto st = stationary(mat);
    labels = mat.labels;
    probs = st.probabilities;
  }
  if (fmt == "csv") {
    std::ostringstream os;
    write_stationary_csv(os, labels, probs);
    return os.str();
  }
  json arr = json::array();
  for (std::size_t i = 0; i < labels.size(); ++i)
    arr.push_back({{"state", labels[i]}, {"probability", format_number(probs[i])}});
  json doc{{"states", mat.size()}, {"lumped", j.lump}, {"stationary", arr}};
  return doc.dump(2) + "\n";
}

template <class S>
int run_exact(const JobSpec& j, const BasicModelParams<S>& p) {
  const auto space = state_space(j, p.model);
  const auto mat = build_matrix(space, p);
  const auto fmt = format_or(j, "csv");
  std::string matrix_csv;
  if (!j.matrix_out.empty()) {
    std::ostringstream os;
    write_matrix_csv(os, mat);
    matrix_csv = os.str();
  }
  const auto body = exact_output(j, mat, fmt);
  if (!j.matrix_out.empty()) emit(j.matrix_out, matrix_csv);
  emit(j.out, body);
  return kExitOk;
}

int cmd_exact(const JobSpec& j) {
  if (j.rational) return run_exact(j, rational_params(j));
  return run_exact(j, double_params(j));
}

// ------------------------------------------------------------------ verify

int cmd_verify(const JobSpec& j) {
  const auto rp = rational_params(j);
  const auto p = to_double(rp);
  require_interior(p);
  std::vector<std::shared_ptr<const ConfigSpace>> spaces;
  if (p.model == Model::Epbca2) {
    std::vector<RingConfig> seeds;
    for (const auto& s : j.inits) seeds.push_back(RingConfig::parse(s));
    if (!j.init.empty()) seeds.push_back(RingConfig::parse(j.init));
    if (j.random_inits > 0) {
      if (!j.seed) throw ParameterError("--random needs --seed");
      if (j.max_L < 3) throw ParameterError("--random needs --max-L >= 3");
      CounterRng rng(*j.seed);
      for (std::size_t i = 0; i < j.random_inits; ++i) {
        const std::size_t L = 3 + rng.below(j.max_L - 2);
        const std::size_t mA = 1 + rng.below(L - 2);
        const std::size_t mB = 1 + rng.below(L - mA - 1);
        seeds.push_back(random_species(L, mA, mB, rng));
      }
    }
    if (seeds.empty()) throw ParameterError("epbca2 verify needs --init or --random");
    for (const auto& x : seeds) {
      require_model_alphabet(x, p.model);
      spaces.push_back(std::make_shared<const ConfigSpace>(enumerate_species_reachable(x)));
    }
  } else {
    if (j.max_L == 0) throw ParameterError("verify needs --max-L");
    const std::size_t first = p.model == Model::Epbca1 ? 3 : 2;
    for (std::size_t L = first; L <= j.max_L; ++L)
      for (std::size_t m = 0; m <= L; ++m) {
        if (m == 0 || m == L) {
          std::cerr << "note: skipping degenerate instance L=" << L << " m=" << m << "\n";
          continue;
        }
        spaces.push_back(std::make_shared<const ConfigSpace>(enumerate_binary(L, m)));
      }
  }

  std::vector<VerificationReport> reports(spaces.size());
  parallel_for(spaces.size(), [&](std::size_t i) {
    reports[i] = j.rational ? verify_conjecture(spaces[i], rp) : verify_conjecture(spaces[i], p);
  });

  bool ok = true;
  for (const auto& r : reports)
    ok = ok && r.max_rel_dev <= j.tol && (!r.exact || r.exact_match);

  std::string body;
  if (format_or(j, "json") == "json") {
    body = verification_json(reports) + "\n";
  } else {
    std::ostringstream os;
    os << "model,L,m,mA,mB,initial,alpha,beta,states,max_rel_dev,argmax_state,stationary_residual\n";
    for (const auto& r : reports)
      os << model_name(r.model) << ',' << r.length << ',' << r.m << ',' << r.mA << ',' << r.mB << ','
         << r.initial << ',' << format_number(r.alpha) << ',' << format_number(r.beta) << ','
         << r.states << ',' << format_number(r.max_rel_dev) << ',' << r.argmax_state << ','
         << format_number(r.stationary_residual) << '\n';
    body = os.str();
  }
  emit(j.out, body);
  if (!ok) {
    std::cerr << "verification failed: deviation above " << j.tol << "\n";
    return kExitTolerance;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------- fd

struct FdRow {
  FluxPoint point;
  std::optional<double> std_error;
};

int cmd_fd(const JobSpec& j) {
  const auto p = double_params(j);
  std::vector<FdRow> rows;
  bool ok = true;

  if (j.limit) {
    if (p.model != Model::Pbca) throw ParameterError("--limit is available for pbca");
    if (j.points < 2) throw ParameterError("--points must be at least 2");
    for (std::size_t i = 0; i < j.points; ++i) {
      const double rho = static_cast<double>(i) / static_cast<double>(j.points - 1);
      rows.push_back({flux_limit_pbca(rho, p.alpha), std::nullopt});
    }
  } else {
    if (j.L == 0) throw ParameterError("fd needs -L (or --limit)");
    require_interior(p);
    struct Point {
      std::size_t mA, mB;
    };
    std::vector<Point> grid;
    if (p.model == Model::Epbca2) {
      if (j.grid == "rhoA,rhoB") {
        for (std::size_t b = 0; b <= j.L; ++b)
          for (std::size_t a = 0; a + b <= j.L; ++a) grid.push_back({a, b});
      } else if (j.grid.empty()) {
        if (!j.mB) throw ParameterError("epbca2 fd needs --mB for a slice, or --grid rhoA,rhoB");
        for (std::size_t a = 0; a + *j.mB <= j.L; ++a) grid.push_back({a, *j.mB});
      } else {
        throw ParameterError("--grid accepts only rhoA,rhoB");
      }
    } else {
      if (!j.grid.empty()) throw ParameterError("--grid applies to epbca2");
      for (std::size_t m = 0; m <= j.L; ++m) grid.push_back({m, 0});
    }
    if (j.mc_overlay) {
      if (!j.seed) throw ParameterError("--mc-overlay requires --seed");
      if (j.steps == 0) throw ParameterError("--mc-overlay requires --steps");
    }

    std::vector<FluxPoint> closed(grid.size()), mc(grid.size());
    std::vector<double> se(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
      const auto [a, b] = grid[i];
      if (p.model == Model::Pbca)
        closed[i] = flux_pbca(j.L, a, p.alpha);
      else if (p.model == Model::Epbca1)
        closed[i] = flux_epbca1(j.L, a, p.alpha, p.beta);
      else
        closed[i] = flux_epbca2(j.L, a, b, p.alpha, p.beta);
      if (!j.mc_overlay) return;
      CounterRng init(*j.seed, 2 * i + 1);
      const auto x0 = p.model == Model::Epbca2 ? random_species(j.L, a, b, init) : random_binary(j.L, a, init);
      RunOptions opts;
      opts.steps = j.steps;
      opts.burn_in = j.from_zero ? 0 : j.burn_in.value_or(default_burn_in(j.steps));
      opts.seed = *j.seed;
      opts.stream = 2 * i + 2;
      const auto s = run(x0, p, opts);
      mc[i] = closed[i];
      mc[i].flux = s.empirical_flux;
      mc[i].provenance = Provenance::MonteCarlo;
      se[i] = s.flux_std_error;
    });

    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      rows.push_back({closed[i], std::nullopt});
      if (!j.mc_overlay) continue;
      rows.push_back({mc[i], se[i]});
      const double tol = std::max(3 * se[i], 0.01);
      worst = std::max(worst, std::abs(mc[i].flux - closed[i].flux) / tol);
    }
    if (j.mc_overlay) {
      ok = worst <= 1.0;
      std::cerr << "mc overlay: max |Q_mc - Q|/max(3 SE, 0.01) = " << worst << "\n";
    }
  }

  std::string body;
  if (format_or(j, "csv") == "csv") {
    std::ostringstream os;
    write_fd_header(os);
    for (const auto& r : rows) write_fd_row(os, r.point);
    body = os.str();
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      const auto& f = r.point;
      json o{{"model", model_name(f.model)},
             {"alpha", f.alpha},
             {"beta", f.beta},
             {"rho", f.rho},
             {"rhoA", f.rhoA},
             {"rhoB", f.rhoB},
             {"flux", f.flux},
             {"provenance", provenance_name(f.provenance)}};
      o["L"] = f.length == 0 ? json("inf") : json(f.length);
      if (r.std_error) o["flux_std_error"] = *r.std_error;
      arr.push_back(std::move(o));
    }
    body = arr.dump(2) + "\n";
  }
  emit(j.out, body);
  return ok ? kExitOk : kExitTolerance;
}

// --------------------------------------------------------------------- gkz

int cmd_gkz(const JobSpec& j) {
  json doc;
  bool ok = true;
  if (j.limit) {
    if (!j.rho) throw ParameterError("gkz --limit needs --rho");
    const double a = parse_exact(j.alpha).convert_to<double>();
    const auto via_gkz = gkz_limit(*j.rho, a);
    const auto closed = flux_limit_pbca(*j.rho, a);
    const auto roots = gkz_limit_roots(*j.rho, a);
    json finite = json::array();
    for (std::size_t L : {50u, 100u, 200u, 400u, 800u, 1600u}) {
      const auto m = static_cast<std::size_t>(std::llround(*j.rho * static_cast<double>(L)));
      if (m == 0 || m >= L) continue;
      finite.push_back({{"L", L}, {"m", m}, {"flux", flux_pbca(L, m, a).flux}});
    }
    const double diff = std::abs(via_gkz.flux - closed.flux);
    ok = diff <= 1e-12;
    doc = {{"rho", *j.rho},
           {"alpha", a},
           {"flux_gkz", via_gkz.flux},
           {"flux_closed_form", closed.flux},
           {"difference", diff},
           {"g_admissible", roots.g_admissible},
           {"g_other", roots.g_other},
           {"flux_other_root", roots.flux_other},
           {"finite_L", finite}};
  } else {
    const std::size_t max_L = j.max_L == 0 ? 40 : j.max_L;
    struct Worst {
      double value = 0.0;
      std::size_t L = 0, m = 0;
      double lambda = 0.0;
      void update(double v, std::size_t l, std::size_t mm, double lam) {
        if (v > value) *this = {v, l, mm, lam};
      }
      json to_json() const { return {{"max", value}, {"L", L}, {"m", m}, {"lambda", lambda}}; }
    };
    Worst ode, neighbor, neighbordel, flux_id, plus_sign;
    std::size_t checked = 0;
    for (double lam : j.lambdas) {
      if (!(lam > 0)) throw ParameterError("--lambda values must be positive");
      if (lam == 1.0) std::cerr << "note: neighbordel skipped at lambda=1 (pole)\n";
      for (std::size_t L = 2; L <= max_L; ++L)
        for (std::size_t m = 1; m < L; ++m) {
          const auto r = gkz_check_identities(L, m, lam);
          ++checked;
          ode.update(r.ode, L, m, lam);
          neighbor.update(r.neighbor, L, m, lam);
          if (r.neighbordel) neighbordel.update(*r.neighbordel, L, m, lam);
          if (r.flux_identity) flux_id.update(*r.flux_identity, L, m, lam);
          if (r.matrix_plus_sign) plus_sign.update(*r.matrix_plus_sign, L, m, lam);
        }
    }
    ok = std::max({ode.value, neighbor.value, neighbordel.value, flux_id.value}) <= j.tol;
    doc = {{"max_L", max_L},
           {"lambdas", j.lambdas},
           {"instances", checked},
           {"tolerance", j.tol},
           {"ode", ode.to_json()},
           {"neighbor", neighbor.to_json()},
           {"neighbordel", neighbordel.to_json()},
           {"flux_identity", flux_id.to_json()},
           {"matrix_plus_sign_info", plus_sign.to_json()}};
  }
  doc["pass"] = ok;
  emit(j.out, doc.dump(2) + "\n");
  return ok ? kExitOk : kExitTolerance;
}

void add_model_flags(CLI::App* sub, JobSpec& j) {
  sub->add_option("--model", j.model, "pbca | epbca1 | epbca2")
      ->check(CLI::IsMember({"pbca", "epbca1", "epbca2"}));
  sub->add_option("--alpha", j.alpha, "hop probability (decimal or p/q)");
  sub->add_option("--beta", j.beta, "second hop probability (decimal or p/q)");
  sub->add_option("--out", j.out, "output file, - for stdout");
  sub->add_option("--format", j.format, "csv | json");
}

void add_ring_flags(CLI::App* sub, JobSpec& j) {
  sub->add_option("-L", j.L, "ring length");
  sub->add_option("-m", j.m, "particles (pbca, epbca1)");
  sub->add_option("--mA", j.mA, "A particles (epbca2)");
  sub->add_option("--mB", j.mB, "B particles (epbca2)");
  sub->add_option("--init", j.init, "initial configuration, e.g. 0011 or 00AABAAB");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel-update hopping automata: simulation, exact chains, flux diagrams"};
  app.set_config("--config", "", "key = value run file");
  app.require_subcommand(1);
  JobSpec j;

  auto* sim = app.add_subcommand("simulate", "Monte Carlo run");
  add_model_flags(sim, j);
  add_ring_flags(sim, j);
  sim->add_option("--seed", j.seed, "RNG seed (required)");
  sim->add_option("--steps", j.steps, "time steps");
  sim->add_option("--burn-in", j.burn_in, "steps discarded before averaging (default 10%)");
  sim->add_flag("--from-zero", j.from_zero, "average from step one");
  sim->add_option("--hist", j.hist_out, "histogram CSV path");

  auto* exact = app.add_subcommand("exact", "transition matrix and stationary distribution");
  add_model_flags(exact, j);
  add_ring_flags(exact, j);
  exact->add_flag("--rational", j.rational, "exact rational arithmetic");
  exact->add_flag("--lump", j.lump, "quotient by rotation; one row per class");
  exact->add_option("--matrix", j.matrix_out, "matrix CSV path");

  auto* verify = app.add_subcommand("verify", "closed-form weights against exact stationary");
  add_model_flags(verify, j);
  verify->add_option("--max-L", j.max_L, "largest ring (sweep over all L, m)");
  verify->add_option("--init", j.init, "epbca2 seed configuration");
  verify->add_option("--inits", j.inits, "more epbca2 seed configurations");
  verify->add_option("--random", j.random_inits, "random epbca2 seeds up to --max-L");
  verify->add_option("--seed", j.seed, "seed for --random");
  verify->add_option("--tol", j.tol, "maximum relative deviation");
  verify->add_flag("--rational", j.rational, "exact rational arithmetic");

  auto* fd = app.add_subcommand("fd", "fundamental diagram");
  add_model_flags(fd, j);
  fd->add_option("-L", j.L, "ring length");
  fd->add_option("--mB", j.mB, "B particles for an epbca2 slice");
  fd->add_option("--grid", j.grid, "rhoA,rhoB for the full epbca2 surface");
  fd->add_flag("--limit", j.limit, "infinite ring curve");
  fd->add_option("--points", j.points, "samples of the --limit curve");
  fd->add_flag("--mc-overlay", j.mc_overlay, "add Monte Carlo rows");
  fd->add_option("--seed", j.seed, "seed for --mc-overlay");
  fd->add_option("--steps", j.steps, "steps per Monte Carlo point");
  fd->add_option("--burn-in", j.burn_in, "steps discarded before averaging");
  fd->add_flag("--from-zero", j.from_zero, "average from step one");

  auto* gkz = app.add_subcommand("gkz", "hypergeometric identity audit");
  gkz->add_option("--max-L", j.max_L, "largest ring (default 40)");
  gkz->add_option("--lambda", j.lambdas, "lambda values");
  gkz->add_option("--tol", j.tol, "maximum relative residual");
  gkz->add_flag("--limit", j.limit, "compare the infinite-ring routes");
  gkz->add_option("--alpha", j.alpha, "hop probability for --limit");
  gkz->add_option("--rho", j.rho, "density for --limit");
  gkz->add_option("--out", j.out, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParam;
  }

  try {
    if (*sim) return cmd_simulate(j);
    if (*exact) return cmd_exact(j);
    if (*verify) return cmd_verify(j);
    if (*fd) return cmd_fd(j);
    if (*gkz) return cmd_gkz(j);
  } catch (const ErgodicityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitErgodicity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParam;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitParam;
}
