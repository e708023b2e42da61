#include "pca/conjecture.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pca/error.hpp"
#include "pca/markov.hpp"

namespace pca {

namespace {

Rational rpow(const Rational& base, std::size_t e) {
  Rational r(1);
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

void require_interior(const RationalParams& p) {
  if (!(p.alpha > 0 && p.alpha < 1))
    throw ParameterError("alpha must lie strictly inside (0, 1)");
  if (p.model != Model::Pbca && !(p.beta > 0 && p.beta < 1))
    throw ParameterError("beta must lie strictly inside (0, 1)");
}

void require_open_unit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0))
    throw ParameterError(std::string(name) + " must lie strictly inside (0, 1)");
}

BigInt fact(long long n) { return factorial(static_cast<unsigned>(n)); }

// C(n, k) extended by C(-1, -1) = 1.
BigInt binomial_ext(long long n, long long k) {
  if (n == -1 && k == -1) return 1;
  return binomial(n, k);
}

}  // namespace

double log_weight_pbca(std::size_t c10, double alpha) {
  return -static_cast<double>(c10) * std::log1p(-alpha);
}

double log_weight_epbca1(std::size_t c100, std::size_t c101, double alpha, double beta) {
  const double l1m_a = std::log1p(-alpha);
  const double log100 = std::log(alpha) + std::log1p(-beta) - 2.0 * l1m_a - std::log(beta);
  const double log101 = std::log(alpha) - l1m_a - std::log(beta);
  return static_cast<double>(c100) * log100 + static_cast<double>(c101) * log101;
}

double log_weight_epbca2(std::size_t kA, std::size_t kB, std::size_t nB, double alpha,
                         double beta) {
  const double nb = static_cast<double>(nB);
  return (nb - static_cast<double>(kB)) * std::log1p(-beta) -
         (static_cast<double>(kA) + nb) * std::log1p(-alpha) +
         nb * (std::log(alpha) - std::log(beta));
}

ConjectureWeight weight_pbca(const RingConfig& x, double alpha) {
  require_open_unit(alpha, "alpha");
  return {log_weight_pbca(count_10(x), alpha), std::nullopt};
}

ConjectureWeight weight_epbca1(const RingConfig& x, double alpha, double beta) {
  require_open_unit(alpha, "alpha");
  require_open_unit(beta, "beta");
  const auto c = count_100_101(x);
  return {log_weight_epbca1(c.c100, c.c101, alpha, beta), std::nullopt};
}

ConjectureWeight weight_epbca2(const RingConfig& x, double alpha, double beta) {
  require_open_unit(alpha, "alpha");
  require_open_unit(beta, "beta");
  const auto t = tally_species(x);
  return {log_weight_epbca2(t.kA, t.kB, t.nB, alpha, beta), std::nullopt};
}

ConjectureWeight conjecture_weight(const RingConfig& x, const ModelParams& p) {
  require_model_alphabet(x, p.model);
  switch (p.model) {
    case Model::Pbca: return weight_pbca(x, p.alpha);
    case Model::Epbca1: return weight_epbca1(x, p.alpha, p.beta);
    case Model::Epbca2: return weight_epbca2(x, p.alpha, p.beta);
  }
  throw std::logic_error("unreachable");
}

ConjectureWeight conjecture_weight(const RingConfig& x, const RationalParams& p) {
  require_model_alphabet(x, p.model);
  require_interior(p);
  const Rational one(1);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  Rational w;
  switch (p.model) {
    case Model::Pbca:
      w = rpow(one / (one - a), count_10(x));
      break;
    case Model::Epbca1: {
      const auto c = count_100_101(x);
      w = rpow(a * (one - b) / ((one - a) * (one - a) * b), c.c100) *
          rpow(a / ((one - a) * b), c.c101);
      break;
    }
    case Model::Epbca2: {
      const auto t = tally_species(x);
      w = rpow(one - b, t.nB - t.kB) / rpow(one - a, t.kA + t.nB) * rpow(a / b, t.nB);
      break;
    }
  }
  return {std::log(to_double(w)), w};
}

std::vector<double> conjecture_distribution(const ConfigSpace& space, const ModelParams& p) {
  std::vector<double> logw(space.size());
  LogSumExp total;
  for (std::size_t i = 0; i < space.size(); ++i) {
    logw[i] = conjecture_weight(space.config(i), p).log_weight;
    total.add(logw[i]);
  }
  const double log_z = total.log_value();
  std::vector<double> out(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out[i] = std::exp(logw[i] - log_z);
  return out;
}

std::vector<Rational> conjecture_distribution(const ConfigSpace& space,
                                              const RationalParams& p) {
  std::vector<Rational> w(space.size());
  Rational total(0);
  for (std::size_t i = 0; i < space.size(); ++i) {
    w[i] = *conjecture_weight(space.config(i), p).rational_weight;
    total += w[i];
  }
  for (auto& v : w) v /= total;
  return w;
}

BigInt count_N_pbca(std::size_t L, std::size_t m, std::size_t k) {
  if (!(m > 0 && m < L)) throw ParameterError("count_N_pbca requires 0 < m < L");
  if (k < 1 || k > std::min(m, L - m)) return 0;
  const auto l = static_cast<long long>(L);
  const auto mm = static_cast<long long>(m);
  const auto kk = static_cast<long long>(k);
  const BigInt num = BigInt(l) * fact(mm - 1) * fact(l - mm - 1);
  const BigInt den = fact(mm - kk) * fact(kk - 1) * fact(kk) * fact(l - mm - kk);
  if (num % den != 0) throw std::logic_error("count_N_pbca: non-integral count");
  return num / den;
}

BigInt count_N_epbca1(std::size_t L, std::size_t m, std::size_t k1, std::size_t k2) {
  if (!(m > 0 && m < L)) throw ParameterError("count_N_epbca1 requires 0 < m < L");
  const auto l = static_cast<long long>(L);
  const auto mm = static_cast<long long>(m);
  const auto a = static_cast<long long>(k1);
  const auto b = static_cast<long long>(k2);
  if (a < 1 || a + b > mm || l - mm - 2 * a - b < 0 || l - mm - a - b - 1 < 0) return 0;
  const BigInt num = BigInt(l) * fact(l - mm - a - b - 1) * fact(mm - 1);
  const BigInt den = fact(a) * fact(b) * fact(l - mm - 2 * a - b) * fact(a - 1) * fact(mm - a - b);
  if (num % den != 0) throw std::logic_error("count_N_epbca1: non-integral count");
  return num / den;
}

BigInt count_k1_zero_epbca1(std::size_t L, std::size_t m) {
  if (m == 0 || m > L) return 0;
  const auto zeros = static_cast<long long>(L - m);
  const auto mm = static_cast<long long>(m);
  if (zeros > mm) return 0;
  // (L/m) C(m, Z) = C(m, Z) + C(m-1, Z-1)
  return binomial(mm, zeros) + binomial(mm - 1, zeros - 1);
}

BigInt count_N_epbca2_relative(std::size_t mA, std::size_t mB, std::size_t kA,
                               std::size_t kB, std::size_t nA, std::size_t nB) {
  const auto s = [](std::size_t v) { return static_cast<long long>(v); };
  return binomial(s(mA), s(kA)) * binomial_ext(s(nA) - 1, s(kA) - 1) * binomial(s(mB), s(kB)) *
         binomial_ext(s(nB) - 1, s(kB) - 1);
}

namespace {

VerificationReport base_report(const ConfigSpace& space, Model model) {
  VerificationReport r;
  r.model = model;
  r.length = space.length();
  r.states = space.size();
  if (space.size() > 0) {
    const RingConfig& x = space.config(0);
    if (x.alphabet() == Alphabet::Species) {
      r.mA = x.count(kA);
      r.mB = x.count(kB);
      r.m = r.mA + r.mB;
      r.initial = x.to_string();
    } else {
      r.m = x.particles();
    }
  }
  return r;
}

}  // namespace

VerificationReport verify_conjecture(std::shared_ptr<const ConfigSpace> space,
                                     const ModelParams& p) {
  require_interior(p);
  VerificationReport r = base_report(*space, p.model);
  r.alpha = p.alpha;
  r.beta = p.model == Model::Pbca ? 0.0 : p.beta;
  const auto conj = conjecture_distribution(*space, p);
  const auto mat = build_matrix(space, p);
  const auto pi = stationary(mat);
  r.stationary_residual = pi.residual;
  for (std::size_t i = 0; i < space->size(); ++i) {
    const double dev = std::abs(conj[i] - pi.probabilities[i]) / pi.probabilities[i];
    if (dev > r.max_rel_dev || r.argmax_state.empty()) {
      r.max_rel_dev = dev;
      r.argmax_state = space->config(i).to_string();
    }
  }
  return r;
}

VerificationReport verify_conjecture(std::shared_ptr<const ConfigSpace> space,
                                     const RationalParams& p) {
  require_interior(p);
  VerificationReport r = base_report(*space, p.model);
  r.alpha = to_double(p.alpha);
  r.beta = p.model == Model::Pbca ? 0.0 : to_double(p.beta);
  r.exact = true;
  const auto conj = conjecture_distribution(*space, p);
  const auto mat = build_matrix(space, p);
  const auto pi = stationary(mat);
  r.stationary_residual = pi.residual;
  r.exact_match = conj == pi.probabilities;
  for (std::size_t i = 0; i < space->size(); ++i) {
    const double dev = to_double(abs(conj[i] - pi.probabilities[i]) / pi.probabilities[i]);
    if (dev > r.max_rel_dev || r.argmax_state.empty()) {
      r.max_rel_dev = dev;
      r.argmax_state = space->config(i).to_string();
    }
  }
  return r;
}

}  // namespace pca
