#include "pca/gkz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pca/error.hpp"

namespace pca {

namespace {

void require_series_args(std::size_t L, std::size_t m, double lambda) {
  if (!(m > 0 && m < L)) throw ParameterError("GKZ series require 0 < m < L");
  if (!(lambda > 0.0)) throw ParameterError("GKZ series require lambda > 0");
}

double rel(double residual, double magnitude) {
  return magnitude == 0.0 ? 0.0 : std::abs(residual) / magnitude;
}

}  // namespace

GkzSeries gkz_F(GkzRole role, std::size_t L, std::size_t m, double lambda) {
  require_series_args(L, m, lambda);
  const auto l = static_cast<long long>(L);
  const auto mm = static_cast<long long>(m);
  const long long kmax = std::min(mm, l - mm);
  const double log_lambda = std::log(lambda);

  std::vector<double> log_terms;
  log_terms.reserve(static_cast<std::size_t>(kmax));
  for (long long k = 1; k <= kmax; ++k) {
    const double third = role == GkzRole::F1 ? log_factorial(k) : log_factorial(k - 1);
    log_terms.push_back(static_cast<double>(k - 1) * log_lambda - log_factorial(mm - k) -
                        log_factorial(k - 1) - third - log_factorial(l - mm - k));
  }
  GkzSeries s;
  s.role = role;
  s.L = L;
  s.m = m;
  s.lambda = lambda;
  s.log_scale = *std::max_element(log_terms.begin(), log_terms.end());
  CompensatedSum v, d1, d2;
  for (long long k = 1; k <= kmax; ++k) {
    const double t = std::exp(log_terms[static_cast<std::size_t>(k - 1)] - s.log_scale);
    const double kk = static_cast<double>(k - 1);
    v.add(t);
    d1.add(kk / lambda * t);
    d2.add(kk * (kk - 1.0) / (lambda * lambda) * t);
  }
  s.value = v.value();
  s.d1 = d1.value();
  s.d2 = d2.value();
  return s;
}

GkzExact gkz_F_exact(GkzRole role, std::size_t L, std::size_t m, const Rational& lambda) {
  if (!(m > 0 && m < L)) throw ParameterError("GKZ series require 0 < m < L");
  if (!(lambda > 0)) throw ParameterError("GKZ series require lambda > 0");
  GkzExact out{Rational(0), Rational(0), Rational(0)};
  const std::size_t kmax = std::min(m, L - m);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const auto u = [](std::size_t v) { return static_cast<unsigned>(v); };
    const BigInt den = factorial(u(m - k)) * factorial(u(k - 1)) *
                       (role == GkzRole::F1 ? factorial(u(k)) : factorial(u(k - 1))) *
                       factorial(u(L - m - k));
    const Rational c = Rational(BigInt(1), den);
    // lambda^(k-1), lambda^(k-2), lambda^(k-3) as needed
    Rational p(1);
    for (std::size_t i = 1; i < k; ++i) p *= lambda;
    out.value += c * p;
    if (k >= 2) {
      Rational p1(1);
      for (std::size_t i = 2; i < k; ++i) p1 *= lambda;
      out.d1 += c * static_cast<long long>(k - 1) * p1;
    }
    if (k >= 3) {
      Rational p2(1);
      for (std::size_t i = 3; i < k; ++i) p2 *= lambda;
      out.d2 += c * static_cast<long long>((k - 1) * (k - 2)) * p2;
    }
  }
  return out;
}

GkzResiduals gkz_check_identities(std::size_t L, std::size_t m, double lambda) {
  const GkzSeries f1 = gkz_F(GkzRole::F1, L, m, lambda);
  const GkzSeries f0 = gkz_F(GkzRole::F0, L, m, lambda);
  // Bring F0 onto F1's scale.
  const double r = std::exp(f0.log_scale - f1.log_scale);
  const double F0 = f0.value * r;
  const double dF0 = f0.d1 * r;
  const double Ld = static_cast<double>(L);
  const double md = static_cast<double>(m);

  GkzResiduals out;
  {
    const double t1 = lambda * (1.0 - lambda) * f1.d2;
    const double t2 = ((Ld - 3.0) * lambda + 2.0) * f1.d1;
    const double t3 = (md - 1.0) * (Ld - md - 1.0) * f1.value;
    out.ode = rel(t1 + t2 - t3, std::abs(t1) + std::abs(t2) + std::abs(t3));
  }
  {
    const double t = lambda * f1.d1;
    out.neighbor = rel(F0 - f1.value - t, std::abs(F0) + std::abs(f1.value) + std::abs(t));
  }
  if (lambda != 1.0) {
    const double c1 = (md - 1.0) * (Ld - md - 1.0) / (1.0 - lambda) * f1.value;
    const double c2 = (Ld - 1.0) * lambda / (1.0 - lambda) * f1.d1;
    const double mag = std::abs(dF0) + std::abs(c1) + std::abs(c2);
    out.neighbordel = rel(dF0 - (c1 - c2), mag);
    out.matrix_plus_sign = rel(dF0 - (c1 + c2), mag);
  }
  if (lambda > 1.0) {
    const double alpha = 1.0 - 1.0 / lambda;
    const double via_series = alpha / Ld * std::exp(f0.log_scale - f1.log_scale) * f0.value / f1.value;
    const double direct = flux_pbca(L, m, alpha).flux;
    out.flux_identity = rel(via_series - direct, std::abs(direct));
  }
  return out;
}

GkzLimitRoots gkz_limit_roots(double rho, double alpha) {
  if (!(rho > 0.0 && rho < 1.0)) throw ParameterError("gkz_limit requires 0 < rho < 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("gkz_limit requires 0 < alpha < 1");
  const double lambda = 1.0 / (1.0 - alpha);
  // a g^2 + b g + c = 0
  const double a = lambda * (1.0 - lambda);
  const double b = lambda / rho;
  const double c = 1.0 - 1.0 / rho;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) throw std::logic_error("gkz_limit: negative discriminant");
  const double q = -0.5 * (b + std::sqrt(disc));
  const double g_far = q / a;
  const double g_near = c / q;
  const double scale = alpha * rho * lambda;
  const double bound = std::min(rho, 1.0 - rho);
  const auto admissible = [&](double g) {
    const double flux = scale * g;
    return flux >= -1e-15 && flux <= bound + 1e-15;
  };
  const bool near_ok = admissible(g_near);
  const bool far_ok = admissible(g_far);
  if (near_ok == far_ok)
    throw std::logic_error("gkz_limit: expected exactly one admissible root");
  GkzLimitRoots out;
  out.g_admissible = near_ok ? g_near : g_far;
  out.g_other = near_ok ? g_far : g_near;
  out.flux_admissible = scale * out.g_admissible;
  out.flux_other = scale * out.g_other;
  return out;
}

FluxPoint gkz_limit(double rho, double alpha) {
  const GkzLimitRoots roots = gkz_limit_roots(rho, alpha);
  FluxPoint p;
  p.model = Model::Pbca;
  p.length = 0;
  p.alpha = alpha;
  p.rho = rho;
  p.rhoA = rho;
  p.flux = roots.flux_admissible;
  p.provenance = Provenance::Limit;
  return p;
}

}  // namespace pca
