#include "pca/markov.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>

#include "pca/error.hpp"
#include "pca/parallel.hpp"
#include "pca/rules.hpp"

namespace pca {

namespace {

double abs_double(double x) { return std::abs(x); }
double abs_double(const Rational& x) { return std::abs(to_double(x)); }

bool same_mass(double a, double b) { return std::abs(a - b) <= 1e-12; }
bool same_mass(const Rational& a, const Rational& b) { return a == b; }

}  // namespace

template <class S>
S TransitionMatrix<S>::entry(std::size_t i, std::size_t j) const {
  for (const auto& t : rows[i])
    if (t.to == j) return t.prob;
  return S(0);
}

template <class S>
std::vector<std::pair<RingConfig, S>> successor_distribution(const RingConfig& x,
                                                             const BasicModelParams<S>& p) {
  validate(p);
  const auto mv = movers(x, p.model);
  if (mv.size() > 62)
    throw CapacityError("successor_distribution: " + std::to_string(mv.size()) +
                        " movable particles exceed the 62-particle enumeration limit");
  std::vector<S> rate(mv.size());
  for (std::size_t i = 0; i < mv.size(); ++i)
    rate[i] = mv[i].rate == HopRate::Alpha ? p.alpha : p.beta;

  std::vector<std::pair<RingConfig, S>> out;
  std::map<RingConfig, std::size_t> seen;
  const std::uint64_t subsets = std::uint64_t{1} << mv.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    S prob(1);
    for (std::size_t i = 0; i < mv.size(); ++i)
      prob *= ((mask >> i) & 1u) ? rate[i] : S(1) - rate[i];
    if (prob == 0) continue;
    RingConfig y = apply_hops(x, mv, mask);
    if (!seen.emplace(y, out.size()).second)
      throw std::logic_error("two hop subsets produced the same successor " + y.to_string());
    out.emplace_back(std::move(y), std::move(prob));
  }
  return out;
}

template <class S>
TransitionMatrix<S> build_matrix(std::shared_ptr<const ConfigSpace> space,
                                 const BasicModelParams<S>& p) {
  if (!space) throw ParameterError("build_matrix: null state space");
  validate(p);
  TransitionMatrix<S> mat;
  const std::size_t n = space->size();
  mat.labels.resize(n);
  mat.rows.resize(n);
  parallel_for(n, [&](std::size_t i) {
    const RingConfig& x = space->config(i);
    mat.labels[i] = x.to_string();
    for (auto& [y, prob] : successor_distribution(x, p)) {
      auto id = space->find(y);
      if (!id)
        throw ClosureError("successor " + y.to_string() + " of " + x.to_string() +
                           " lies outside the state space");
      mat.rows[i].push_back({*id, std::move(prob)});
    }
    std::sort(mat.rows[i].begin(), mat.rows[i].end(),
              [](const auto& a, const auto& b) { return a.to < b.to; });
  });
  mat.space = std::move(space);
  return mat;
}

template <class S>
RecurrenceInfo recurrence(const TransitionMatrix<S>& mat) {
  const std::size_t n = mat.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  // Iterative Tarjan.
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, ncomp = 0;
  struct Frame {
    std::size_t v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& row = mat.rows[f.v];
      if (f.edge < row.size()) {
        const std::size_t w = row[f.edge++].to;
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
    }
  }

  std::vector<bool> closed(ncomp, true);
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& t : mat.rows[v])
      if (comp[t.to] != comp[v]) closed[comp[v]] = false;

  RecurrenceInfo info;
  info.components = static_cast<int>(ncomp);
  info.closed_classes = static_cast<int>(std::count(closed.begin(), closed.end(), true));

  // Period of the first closed class: gcd of level differences along edges.
  std::size_t first = kUnset;
  for (std::size_t v = 0; v < n && first == kUnset; ++v)
    if (closed[comp[v]]) first = v;
  if (first != kUnset) {
    std::vector<long long> level(n, -1);
    std::vector<std::size_t> queue{first};
    level[first] = 0;
    std::size_t g = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (const auto& t : mat.rows[v]) {
        if (comp[t.to] != comp[first]) continue;
        if (level[t.to] < 0) {
          level[t.to] = level[v] + 1;
          queue.push_back(t.to);
        } else {
          const long long d = level[v] + 1 - level[t.to];
          g = std::gcd(g, static_cast<std::size_t>(std::llabs(d)));
        }
      }
    }
    info.period = g == 0 ? 1 : g;
  }
  return info;
}

namespace {

template <class S>
void require_ergodic(const TransitionMatrix<S>& mat) {
  if (mat.size() == 0) throw ParameterError("stationary: empty chain");
  const RecurrenceInfo info = recurrence(mat);
  if (info.closed_classes != 1)
    throw ErgodicityError("chain is not ergodic: " + std::to_string(info.closed_classes) +
                              " closed communicating classes among " +
                              std::to_string(info.components) +
                              " strongly connected components",
                          info.closed_classes);
  if (info.period != 1)
    throw ErgodicityError("chain is periodic with period " + std::to_string(info.period),
                          info.closed_classes);
}

template <class S>
double residual_of(const TransitionMatrix<S>& mat, const std::vector<S>& pi) {
  std::vector<S> next(mat.size(), S(0));
  for (std::size_t i = 0; i < mat.size(); ++i)
    for (const auto& t : mat.rows[i]) next[t.to] += pi[i] * t.prob;
  double r = 0.0;
  for (std::size_t j = 0; j < mat.size(); ++j) r = std::max(r, abs_double(next[j] - pi[j]));
  return r;
}

std::vector<double> solve_dense(const TransitionMatrix<double>& mat) {
  const auto n = static_cast<Eigen::Index>(mat.size());
  Eigen::MatrixXd a = -Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (const auto& t : mat.rows[static_cast<std::size_t>(i)])
      a(static_cast<Eigen::Index>(t.to), i) += t.prob;
  a.row(n - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(n - 1) = 1.0;
  const Eigen::VectorXd x = a.partialPivLu().solve(b);
  return std::vector<double>(x.data(), x.data() + n);
}

std::vector<double> solve_power(const TransitionMatrix<double>& mat) {
  const std::size_t n = mat.size();
  std::vector<double> pi(n, 1.0 / static_cast<double>(n)), next(n);
  std::vector<double> cesaro(n, 0.0);
  double best = std::numeric_limits<double>::infinity();
  std::size_t stalled = 0;
  bool averaging = false;
  std::size_t averaged = 0;
  for (std::size_t it = 0; it < 5'000'000; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : mat.rows[i]) next[t.to] += pi[i] * t.prob;
    double diff = 0.0, total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      diff = std::max(diff, std::abs(next[j] - pi[j]));
      total += next[j];
    }
    for (auto& v : next) v /= total;
    pi.swap(next);
    if (averaging) {
      for (std::size_t j = 0; j < n; ++j) cesaro[j] += pi[j];
      ++averaged;
      if (averaged % 1000 == 0) {
        std::vector<double> avg(n);
        for (std::size_t j = 0; j < n; ++j) avg[j] = cesaro[j] / static_cast<double>(averaged);
        if (residual_of(mat, avg) <= 1e-13) return avg;
      }
      continue;
    }
    if (diff <= 1e-13) return pi;
    if (diff < best * 0.999) {
      best = diff;
      stalled = 0;
    } else if (++stalled > 10'000) {
      averaging = true;  // oscillation: switch to Cesaro means
    }
  }
  throw ErgodicityError("power iteration did not converge", 1);
}

std::vector<Rational> solve_exact(const TransitionMatrix<Rational>& mat) {
  const std::size_t n = mat.size();
  // Rows of (P^T - I) with the last equation replaced by normalization.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] -= 1;
    for (const auto& t : mat.rows[i]) a[t.to][i] += t.prob;
  }
  for (std::size_t j = 0; j < n; ++j) a[n - 1][j] = 1;
  a[n - 1][n] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw ErgodicityError("singular stationary system", 0);
    std::swap(a[piv], a[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t k = col; k <= n; ++k)
      if (a[col][k] != 0) a[col][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = col; k <= n; ++k)
        if (a[col][k] != 0) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = a[i][n];
  return pi;
}

}  // namespace

template <>
StationaryDist<double> stationary(const TransitionMatrix<double>& mat) {
  require_ergodic(mat);
  StationaryDist<double> out;
  out.probabilities = mat.size() <= kDenseLimit ? solve_dense(mat) : solve_power(mat);
  double total = 0.0;
  for (auto& v : out.probabilities) {
    v = std::max(v, 0.0);
    total += v;
  }
  for (auto& v : out.probabilities) v /= total;
  out.residual = residual_of(mat, out.probabilities);
  return out;
}

template <>
StationaryDist<Rational> stationary(const TransitionMatrix<Rational>& mat) {
  require_ergodic(mat);
  StationaryDist<Rational> out;
  out.probabilities = solve_exact(mat);
  out.residual = residual_of(mat, out.probabilities);
  return out;
}

template <class S>
TransitionMatrix<S> lump_by_rotation(const TransitionMatrix<S>& mat) {
  if (!mat.space) throw ParameterError("lump_by_rotation: matrix has no configuration space");
  const ConfigSpace& space = *mat.space;
  const std::size_t classes = space.class_count();
  TransitionMatrix<S> out;
  out.labels.resize(classes);
  out.rows.resize(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    out.labels[c] = space.representative(c).to_string();
    std::map<std::size_t, S> reference;
    bool first = true;
    for (std::size_t id : space.class_members(c)) {
      std::map<std::size_t, S> mass;
      for (const auto& t : mat.rows[id]) mass[space.class_of(t.to)] += t.prob;
      if (first) {
        reference = std::move(mass);
        first = false;
        continue;
      }
      bool ok = mass.size() == reference.size();
      for (auto it = mass.begin(), jt = reference.begin(); ok && it != mass.end(); ++it, ++jt)
        ok = it->first == jt->first && same_mass(it->second, jt->second);
      if (!ok)
        throw LumpabilityError("rotation lumping fails at class " + out.labels[c] +
                               " (member " + space.config(id).to_string() + ")");
    }
    for (auto& [to, prob] : reference) out.rows[c].push_back({to, prob});
  }
  return out;
}

template <class S>
std::vector<S> stationary_class_vector(const TransitionMatrix<S>& lumped) {
  return stationary(lumped).probabilities;
}

template <class S>
std::vector<S> class_masses(const ConfigSpace& space, const std::vector<S>& pi) {
  std::vector<S> out(space.class_count(), S(0));
  for (std::size_t id = 0; id < space.size(); ++id) out[space.class_of(id)] += pi[id];
  return out;
}

template <class S>
double max_row_defect(const TransitionMatrix<S>& mat) {
  double worst = 0.0;
  for (const auto& row : mat.rows) {
    S total(0);
    for (const auto& t : row) total += t.prob;
    worst = std::max(worst, abs_double(total - S(1)));
  }
  return worst;
}

#define PCA_INSTANTIATE(S)                                                                  \
  template struct TransitionMatrix<S>;                                                      \
  template std::vector<std::pair<RingConfig, S>> successor_distribution(                    \
      const RingConfig&, const BasicModelParams<S>&);                                       \
  template TransitionMatrix<S> build_matrix(std::shared_ptr<const ConfigSpace>,             \
                                            const BasicModelParams<S>&);                    \
  template RecurrenceInfo recurrence(const TransitionMatrix<S>&);                           \
  template TransitionMatrix<S> lump_by_rotation(const TransitionMatrix<S>&);                \
  template std::vector<S> stationary_class_vector(const TransitionMatrix<S>&);              \
  template std::vector<S> class_masses(const ConfigSpace&, const std::vector<S>&);          \
  template double max_row_defect(const TransitionMatrix<S>&);

PCA_INSTANTIATE(double)
PCA_INSTANTIATE(Rational)

#undef PCA_INSTANTIATE

}  // namespace pca
