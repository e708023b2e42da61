#include "pca/flux.hpp"

#include <algorithm>
#include <cmath>

#include "pca/conjecture.hpp"
#include "pca/error.hpp"

namespace pca {

namespace {

void require_open_unit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0))
    throw ParameterError(std::string(name) + " must lie strictly inside (0, 1)");
}

double lf(long long n) { return log_factorial(n); }

double log_binomial(long long n, long long k) {
  if (n == -1 && k == -1) return 0.0;
  if (k < 0 || n < 0 || k > n) return -INFINITY;
  return lf(n) - lf(k) - lf(n - k);
}

FluxPoint make_point(Model model, std::size_t L, std::size_t m, double alpha, double beta,
                     double flux) {
  FluxPoint p;
  p.model = model;
  p.length = L;
  p.alpha = alpha;
  p.beta = beta;
  p.rho = static_cast<double>(m) / static_cast<double>(L);
  p.rhoA = model == Model::Epbca2 ? 0.0 : p.rho;
  p.flux = flux;
  p.provenance = Provenance::ClosedForm;
  return p;
}

}  // namespace

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::MonteCarlo: return "monte-carlo";
    case Provenance::ExactChain: return "exact-chain";
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Limit: return "limit";
  }
  return "?";
}

FluxPoint flux_pbca(std::size_t L, std::size_t m, double alpha) {
  require_open_unit(alpha, "alpha");
  if (L == 0 || m > L) throw ParameterError("flux_pbca requires 0 <= m <= L, L >= 1");
  if (m == 0 || m == L) return make_point(Model::Pbca, L, m, alpha, 0.0, 0.0);

  const auto l = static_cast<long long>(L);
  const auto mm = static_cast<long long>(m);
  const double log_lambda = -std::log1p(-alpha);
  LogSumExp num, den;
  for (long long k = 1; k <= std::min(mm, l - mm); ++k) {
    const double log_n = std::log(static_cast<double>(l)) + lf(mm - 1) + lf(l - mm - 1) -
                         lf(mm - k) - lf(k - 1) - lf(k) - lf(l - mm - k);
    const double t = log_n + static_cast<double>(k) * log_lambda;
    den.add(t);
    num.add(t + std::log(static_cast<double>(k)));
  }
  const double q = alpha / static_cast<double>(L) * std::exp(num.log_value() - den.log_value());
  return make_point(Model::Pbca, L, m, alpha, 0.0, q);
}

Rational flux_pbca_exact(std::size_t L, std::size_t m, const Rational& alpha) {
  if (!(alpha > 0 && alpha < 1)) throw ParameterError("alpha must lie strictly inside (0, 1)");
  if (L == 0 || m > L) throw ParameterError("flux_pbca_exact requires 0 <= m <= L, L >= 1");
  if (m == 0 || m == L) return Rational(0);
  const Rational lambda = Rational(1) / (Rational(1) - alpha);
  Rational num(0), den(0), power(1);
  for (std::size_t k = 1; k <= std::min(m, L - m); ++k) {
    power *= lambda;
    const Rational t = Rational(count_N_pbca(L, m, k)) * power;
    den += t;
    num += t * static_cast<long long>(k);
  }
  return alpha / static_cast<long long>(L) * num / den;
}

FluxPoint flux_epbca1(std::size_t L, std::size_t m, double alpha, double beta) {
  require_open_unit(alpha, "alpha");
  require_open_unit(beta, "beta");
  if (L < 3 || m > L) throw ParameterError("flux_epbca1 requires L >= 3 and 0 <= m <= L");
  if (m == 0 || m == L) {
    auto p = make_point(Model::Epbca1, L, m, alpha, beta, 0.0);
    return p;
  }
  const auto l = static_cast<long long>(L);
  const auto mm = static_cast<long long>(m);
  LogSumExp num, den;
  for (long long k1 = 1; 2 * k1 <= l - mm && k1 <= mm; ++k1) {
    for (long long k2 = 0; k1 + k2 <= mm && 2 * k1 + k2 <= l - mm; ++k2) {
      const double log_n = std::log(static_cast<double>(l)) + lf(l - mm - k1 - k2 - 1) +
                           lf(mm - 1) - lf(k1) - lf(k2) - lf(l - mm - 2 * k1 - k2) -
                           lf(k1 - 1) - lf(mm - k1 - k2);
      const double t = log_n + log_weight_epbca1(static_cast<std::size_t>(k1),
                                                 static_cast<std::size_t>(k2), alpha, beta);
      den.add(t);
      num.add(t + std::log(alpha * static_cast<double>(k1) + beta * static_cast<double>(k2)));
    }
  }
  // Rings whose empty runs all have length one: #100 = 0, #101 = L - m.
  const BigInt zero_family = count_k1_zero_epbca1(L, m);
  if (zero_family > 0) {
    const double t = log_big(zero_family) + log_weight_epbca1(0, L - m, alpha, beta);
    den.add(t);
    num.add(t + std::log(beta * static_cast<double>(L - m)));
  }
  const double q = std::exp(num.log_value() - den.log_value()) / static_cast<double>(L);
  return make_point(Model::Epbca1, L, m, alpha, beta, q);
}

FluxPoint flux_epbca2(const ConfigSpace& space, double alpha, double beta) {
  require_open_unit(alpha, "alpha");
  require_open_unit(beta, "beta");
  if (space.size() == 0 || space.alphabet() != Alphabet::Species)
    throw ParameterError("flux_epbca2 needs a non-empty two-species space");
  const std::size_t L = space.length();
  LogSumExp num, den;
  for (const auto& x : space.configs()) {
    const auto t = tally_species(x);
    const double lw = log_weight_epbca2(t.kA, t.kB, t.nB, alpha, beta);
    den.add(lw);
    const double rate = alpha * static_cast<double>(t.kA) + beta * static_cast<double>(t.kB);
    if (rate > 0.0) num.add(lw + std::log(rate));
  }
  const double q = num.empty() ? 0.0
                               : std::exp(num.log_value() - den.log_value()) /
                                     static_cast<double>(L);
  const RingConfig& x0 = space.config(0);
  FluxPoint p = make_point(Model::Epbca2, L, x0.particles(), alpha, beta, q);
  p.rhoA = static_cast<double>(x0.count(kA)) / static_cast<double>(L);
  p.rhoB = static_cast<double>(x0.count(kB)) / static_cast<double>(L);
  return p;
}

FluxPoint flux_epbca2(std::size_t L, std::size_t mA, std::size_t mB, double alpha, double beta) {
  require_open_unit(alpha, "alpha");
  require_open_unit(beta, "beta");
  if (L == 0 || mA + mB > L) throw ParameterError("flux_epbca2 requires mA + mB <= L");
  const auto a = static_cast<long long>(mA);
  const auto b = static_cast<long long>(mB);
  const long long zeros = static_cast<long long>(L) - a - b;
  LogSumExp num, den;
  if (a + b > 0 && zeros > 0) {
    for (long long nA = 0; nA <= zeros; ++nA) {
      const long long nB = zeros - nA;
      if ((nA > 0 && a == 0) || (nB > 0 && b == 0)) continue;
      for (long long kA = nA > 0 ? 1 : 0; kA <= std::min(nA, a); ++kA) {
        const double logA = log_binomial(a, kA) + log_binomial(nA - 1, kA - 1);
        for (long long kB = nB > 0 ? 1 : 0; kB <= std::min(nB, b); ++kB) {
          const double t = logA + log_binomial(b, kB) + log_binomial(nB - 1, kB - 1) +
                           log_weight_epbca2(static_cast<std::size_t>(kA),
                                             static_cast<std::size_t>(kB),
                                             static_cast<std::size_t>(nB), alpha, beta);
          den.add(t);
          const double rate = alpha * static_cast<double>(kA) + beta * static_cast<double>(kB);
          if (rate > 0.0) num.add(t + std::log(rate));
        }
      }
    }
  }
  const double q = num.empty() ? 0.0
                               : std::exp(num.log_value() - den.log_value()) /
                                     static_cast<double>(L);
  FluxPoint p = make_point(Model::Epbca2, L, mA + mB, alpha, beta, q);
  p.rhoA = static_cast<double>(mA) / static_cast<double>(L);
  p.rhoB = static_cast<double>(mB) / static_cast<double>(L);
  return p;
}

FluxPoint flux_limit_pbca(double rho, double alpha) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in [0, 1]");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in [0, 1]");
  // 1 - 4 a r (1-r) rewritten as a sum of nonnegative terms, and
  // (1 - s)/2 as 2 a r (1-r) / (1 + s), both free of cancellation.
  const double h = rho * (1.0 - rho);
  const double s = std::sqrt((1.0 - 2.0 * rho) * (1.0 - 2.0 * rho) + 4.0 * (1.0 - alpha) * h);
  FluxPoint p;
  p.model = Model::Pbca;
  p.length = 0;
  p.alpha = alpha;
  p.rho = rho;
  p.rhoA = rho;
  p.flux = 2.0 * alpha * h / (1.0 + s);
  p.provenance = Provenance::Limit;
  return p;
}

}  // namespace pca
