#pragma once

#include <cstddef>
#include <optional>

#include "pca/flux.hpp"
#include "pca/numeric.hpp"

namespace pca {

// The two hypergeometric partition sums behind the PBCA diagram, for
// lambda = 1/(1-alpha):
//   F1(lambda) = sum_{k=1}^{m} lambda^{k-1} / ((m-k)! (k-1)! k! (L-m-k)!)
//   F0(lambda) = sum_{k=1}^{m} lambda^{k-1} / ((m-k)! (k-1)! (k-1)! (L-m-k)!)
// with 1/(negative integer)! = 0. F1 is the (1, L-1, m) member of the family
// and F0 the (0, L-2, m-1) member.
enum class GkzRole { F1, F0 };

// Value and derivatives share a scale: the true numbers are
// exp(log_scale) * {value, d1, d2}. This keeps L in the hundreds in range.
struct GkzSeries {
  GkzRole role = GkzRole::F1;
  std::size_t L = 0;
  std::size_t m = 0;
  double lambda = 0.0;
  double log_scale = 0.0;
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// Requires 0 < m < L and lambda > 0.
GkzSeries gkz_F(GkzRole role, std::size_t L, std::size_t m, double lambda);

struct GkzExact {
  Rational value;
  Rational d1;
  Rational d2;
};
GkzExact gkz_F_exact(GkzRole role, std::size_t L, std::size_t m, const Rational& lambda);

// Relative residuals (|lhs - rhs| / sum of |terms|) of the identities tying
// F1 and F0 together.
struct GkzResiduals {
  // lambda (1-lambda) F1'' + ((L-3) lambda + 2) F1' - (m-1)(L-m-1) F1 = 0
  double ode = 0.0;
  // F0 = F1 + lambda F1'
  double neighbor = 0.0;
  // F0' = (m-1)(L-m-1)/(1-lambda) F1 - (L-1) lambda/(1-lambda) F1'
  // Undefined at lambda = 1.
  std::optional<double> neighbordel;
  // Same relation with +(L-1) lambda/(1-lambda), as in a common 2x2 matrix
  // statement of it. Reported for comparison only; it does not hold.
  std::optional<double> matrix_plus_sign;
  // (alpha/L) F0/F1 against flux_pbca at alpha = 1 - 1/lambda (lambda > 1).
  std::optional<double> flux_identity;
};

GkzResiduals gkz_check_identities(std::size_t L, std::size_t m, double lambda);

// Both roots of lambda (1-lambda) g^2 + (lambda/rho) g + 1 - 1/rho = 0 and
// the flux alpha rho lambda g each one implies.
struct GkzLimitRoots {
  double g_admissible = 0.0;
  double g_other = 0.0;
  double flux_admissible = 0.0;
  double flux_other = 0.0;
};

GkzLimitRoots gkz_limit_roots(double rho, double alpha);

// Infinite-ring flux from the leading large-m coefficient of F1'/F1. The
// root is selected by 0 <= Q <= min(rho, 1-rho). Requires 0 < rho, alpha < 1.
FluxPoint gkz_limit(double rho, double alpha);

}  // namespace pca
