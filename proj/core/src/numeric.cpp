#include "pca/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace pca {

Rational rational_approx(double x, std::int64_t max_den) {
  // Convergents h/k of the continued fraction of x.
  BigInt h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  BigInt k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  while (frac > 1e-15) {
    const double inv = 1.0 / frac;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    const BigInt k_next = a * k + k_prev;
    if (k_next > max_den) break;
    const BigInt h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - std::floor(inv);
  }
  return Rational(h, k);
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: non-positive argument");
  const auto bits = static_cast<long long>(boost::multiprecision::msb(x));
  if (bits < 1000) return std::log(x.convert_to<double>());
  const long long shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

}  // namespace pca
