#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pca {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

// Exact p/q.
inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(BigInt(num), BigInt(den));
}

// Closest rational with denominator <= max_den (continued fractions).
Rational rational_approx(double x, std::int64_t max_den = 1'000'000);

BigInt factorial(unsigned n);
BigInt binomial(long long n, long long k);

// log(n!) via lgamma; exact enough for ratios of weights.
inline double log_factorial(long long n) {
  return std::lgamma(static_cast<double>(n) + 1.0);
}

// Natural log of a positive big integer, usable beyond double range.
double log_big(const BigInt& x);

// Neumaier-compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Accumulates positive terms given by their logarithms. The running maximum
// is rescaled on the fly, so terms far beyond double range are fine.
class LogSumExp {
 public:
  void add(double log_term) {
    if (log_term == -std::numeric_limits<double>::infinity()) return;
    if (empty_) {
      max_ = log_term;
      empty_ = false;
      acc_.add(1.0);
      return;
    }
    if (log_term <= max_) {
      acc_.add(std::exp(log_term - max_));
    } else {
      const double scale = std::exp(max_ - log_term);
      const double old = acc_.value() * scale;
      acc_ = CompensatedSum{};
      acc_.add(old);
      acc_.add(1.0);
      max_ = log_term;
    }
  }
  bool empty() const { return empty_; }
  // log of the accumulated sum; -inf when empty.
  double log_value() const {
    if (empty_) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(acc_.value());
  }

 private:
  bool empty_ = true;
  double max_ = 0.0;
  CompensatedSum acc_;
};

}  // namespace pca
