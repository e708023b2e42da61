#include "pca/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "pca/error.hpp"

namespace pca {

namespace {

// In-place parallel update written as the conservation law
//   u_j <- u_j + q_{j-1} - q_j
// with q_j the flow from site j to j+1, one flow field per species.
class Stepper {
 public:
  Stepper(Model model, double alpha, double beta) : model_(model), alpha_(alpha), beta_(beta) {}

  std::size_t advance(std::vector<std::uint8_t>& cells, CounterRng& rng) {
    const std::size_t n = cells.size();
    qa_.assign(n, 0);
    qb_.assign(n, 0);
    std::size_t moves = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint8_t here = cells[j];
      const std::uint8_t right = cells[j + 1 == n ? 0 : j + 1];
      if (here == kEmpty || right != kEmpty) continue;
      // Site j holds a particle and j+1 is empty: the particle is movable.
      const double r = rng.uniform();
      switch (model_) {
        case Model::Pbca: {
          const bool a = r < alpha_;
          qa_[j] = a;
          break;
        }
        case Model::Epbca1: {
          const std::uint8_t next2 = cells[(j + 2) % n];
          const bool a = r < alpha_;
          const bool b = r < beta_;
          // max(min(u_j, 1-u_{j+1}, u_{j+2}, b), min(u_j, 1-u_{j+1}, 1-u_{j+2}, a))
          qa_[j] = std::max<std::uint8_t>(next2 != kEmpty && b, next2 == kEmpty && a);
          break;
        }
        case Model::Epbca2: {
          qa_[j] = here == kA && r < alpha_;
          qb_[j] = here == kB && r < beta_;
          break;
        }
      }
      moves += qa_[j] + qb_[j];
    }
    next_.assign(n, kEmpty);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t left = j == 0 ? n - 1 : j - 1;
      const std::uint8_t c = cells[j];
      const int u = (c == kA) + qa_[left] - qa_[j];
      const int v = (c == kB) + qb_[left] - qb_[j];
      next_[j] = u ? kA : (v ? kB : kEmpty);
    }
    cells.swap(next_);
    return moves;
  }

 private:
  Model model_;
  double alpha_;
  double beta_;
  std::vector<std::uint8_t> qa_, qb_, next_;
};

void check_run_inputs(const RingConfig& x, const ModelParams& p) {
  validate(p);
  require_model_alphabet(x, p.model);
}

}  // namespace

StepResult step(const RingConfig& x, const ModelParams& p, CounterRng& rng) {
  check_run_inputs(x, p);
  std::vector<std::uint8_t> cells = x.cells();
  Stepper stepper(p.model, p.alpha, p.beta);
  const std::size_t moves = stepper.advance(cells, rng);
  return {RingConfig(x.alphabet(), std::move(cells)), moves};
}

SimStats run(const RingConfig& x0, const ModelParams& p, const RunOptions& opts) {
  check_run_inputs(x0, p);
  if (opts.steps <= opts.burn_in)
    throw ParameterError("run: steps must exceed burn_in");
  if (opts.space && (opts.space->length() != x0.size() || !opts.space->find(x0)))
    throw ParameterError("run: initial configuration is not in the supplied state space");

  SimStats st;
  st.model = p.model;
  st.alpha = p.alpha;
  st.beta = p.model == Model::Pbca ? 0.0 : p.beta;
  st.length = x0.size();
  st.particles = x0.particles();
  if (x0.alphabet() == Alphabet::Species) {
    st.mA = x0.count(kA);
    st.mB = x0.count(kB);
  } else {
    st.mA = st.particles;
  }
  st.seed = opts.seed;
  st.steps = opts.steps;
  st.burn_in = opts.burn_in;
  st.empirical_density = static_cast<double>(st.particles) / static_cast<double>(st.length);
  if (opts.space) st.histogram_by_id.assign(opts.space->size(), 0);

  const std::uint64_t recorded = opts.steps - opts.burn_in;
  const std::size_t batches = static_cast<std::size_t>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(opts.batches, recorded)));
  const std::uint64_t batch_len = recorded / batches;
  std::vector<std::uint64_t> batch_moves(batches, 0);
  std::vector<std::uint64_t> batch_steps(batches, 0);

  CounterRng rng(opts.seed, opts.stream);
  Stepper stepper(p.model, p.alpha, p.beta);
  std::vector<std::uint8_t> cells = x0.cells();
  for (std::uint64_t n = 1; n <= opts.steps; ++n) {
    const std::size_t moves = stepper.advance(cells, rng);
    if (n <= opts.burn_in) continue;
    const std::uint64_t r = n - opts.burn_in - 1;
    const std::size_t b = static_cast<std::size_t>(std::min<std::uint64_t>(r / batch_len, batches - 1));
    batch_moves[b] += moves;
    batch_steps[b] += 1;
    st.total_moves += moves;
    if (opts.space) {
      st.histogram_by_id[opts.space->id_of(RingConfig(x0.alphabet(), cells))] += 1;
    } else if (opts.histogram) {
      st.histogram_by_config[RingConfig(x0.alphabet(), cells).to_string()] += 1;
    }
  }

  const double L = static_cast<double>(st.length);
  st.empirical_flux = static_cast<double>(st.total_moves) / (L * static_cast<double>(recorded));
  if (batches > 1) {
    double mean = 0.0;
    std::vector<double> f(batches);
    for (std::size_t b = 0; b < batches; ++b) {
      f[b] = static_cast<double>(batch_moves[b]) / (L * static_cast<double>(batch_steps[b]));
      mean += f[b];
    }
    mean /= static_cast<double>(batches);
    double ss = 0.0;
    for (double v : f) ss += (v - mean) * (v - mean);
    const double var = ss / static_cast<double>(batches - 1);
    st.flux_std_error = std::sqrt(var / static_cast<double>(batches));
  }
  st.final_config = RingConfig(x0.alphabet(), std::move(cells));
  return st;
}

namespace {

void fisher_yates(std::vector<std::uint8_t>& cells, CounterRng& rng) {
  for (std::size_t i = cells.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(cells[i - 1], cells[j]);
  }
}

}  // namespace

RingConfig random_binary(std::size_t length, std::size_t particles, CounterRng& rng) {
  if (particles > length) throw ParameterError("random_binary: m > L");
  std::vector<std::uint8_t> cells(length, kEmpty);
  std::fill_n(cells.begin(), particles, kOne);
  fisher_yates(cells, rng);
  return RingConfig(Alphabet::Binary, std::move(cells));
}

RingConfig random_species(std::size_t length, std::size_t mA, std::size_t mB,
                          CounterRng& rng) {
  if (mA + mB > length) throw ParameterError("random_species: mA + mB > L");
  std::vector<std::uint8_t> cells(length, kEmpty);
  std::fill_n(cells.begin(), mA, kA);
  std::fill_n(cells.begin() + static_cast<std::ptrdiff_t>(mA), mB, kB);
  fisher_yates(cells, rng);
  return RingConfig(Alphabet::Species, std::move(cells));
}

}  // namespace pca
