#include <gtest/gtest.h>

#include <cmath>

#include "pca/error.hpp"
#include "pca/flux.hpp"
#include "pca/gkz.hpp"

namespace pca {
namespace {

double unscaled(const GkzSeries& s) { return std::exp(s.log_scale) * s.value; }

TEST(GkzSeries, HandValues) {
  EXPECT_NEAR(unscaled(gkz_F(GkzRole::F1, 4, 2, 2.0)), 2.0, 1e-14);
  EXPECT_NEAR(unscaled(gkz_F(GkzRole::F0, 4, 2, 2.0)), 3.0, 1e-14);
  const auto e1 = gkz_F_exact(GkzRole::F1, 4, 2, Rational(2));
  const auto e0 = gkz_F_exact(GkzRole::F0, 4, 2, Rational(2));
  EXPECT_EQ(e1.value, 2);
  EXPECT_EQ(e0.value, 3);
  // (alpha / L) F0 / F1 at alpha = 1/2.
  EXPECT_EQ(Rational(1, 2) / 4 * e0.value / e1.value, make_rational(3, 16));
}

TEST(GkzSeries, ScaledMatchesExact) {
  const auto s = gkz_F(GkzRole::F1, 14, 6, 1.75);
  const auto e = gkz_F_exact(GkzRole::F1, 14, 6, make_rational(7, 4));
  const double k = std::exp(s.log_scale);
  EXPECT_NEAR(k * s.value / to_double(e.value), 1.0, 1e-13);
  EXPECT_NEAR(k * s.d1 / to_double(e.d1), 1.0, 1e-13);
  EXPECT_NEAR(k * s.d2 / to_double(e.d2), 1.0, 1e-13);
}

TEST(GkzSeries, RejectsBadArguments) {
  EXPECT_THROW(gkz_F(GkzRole::F1, 5, 0, 2.0), ParameterError);
  EXPECT_THROW(gkz_F(GkzRole::F1, 5, 5, 2.0), ParameterError);
  EXPECT_THROW(gkz_F(GkzRole::F0, 5, 2, 0.0), ParameterError);
}

TEST(GkzIdentities, HoldOnGrid) {
  for (std::size_t L = 4; L <= 200; L += (L < 20 ? 1 : 37))
    for (std::size_t m = 1; m < L; m += (L < 20 ? 1 : L / 7))
      for (double lam : {0.3, 1.0, 1.25, 2.0, 10.0, 100.0}) {
        const auto r = gkz_check_identities(L, m, lam);
        EXPECT_LE(r.ode, 1e-10) << L << " " << m << " " << lam;
        EXPECT_LE(r.neighbor, 1e-10) << L << " " << m << " " << lam;
        if (lam != 1.0) {
          ASSERT_TRUE(r.neighbordel);
          EXPECT_LE(*r.neighbordel, 1e-9) << L << " " << m << " " << lam;
        } else {
          EXPECT_FALSE(r.neighbordel);
        }
        if (lam > 1.0) {
          ASSERT_TRUE(r.flux_identity);
          EXPECT_LE(*r.flux_identity, 1e-10);
        } else {
          EXPECT_FALSE(r.flux_identity);
        }
      }
}

TEST(GkzIdentities, NeighborExactForSmallRings) {
  for (std::size_t L = 2; L <= 12; ++L)
    for (std::size_t m = 1; m < L; ++m)
      for (const Rational lam : {make_rational(3, 2), make_rational(5, 1), make_rational(2, 7)}) {
        const auto f1 = gkz_F_exact(GkzRole::F1, L, m, lam);
        const auto f0 = gkz_F_exact(GkzRole::F0, L, m, lam);
        EXPECT_EQ(f0.value, f1.value + lam * f1.d1) << L << " " << m;
        const Rational c(static_cast<long long>((m - 1) * (L - m - 1)));
        EXPECT_EQ(lam * (1 - lam) * f1.d2 + (Rational(static_cast<long long>(L) - 3) * lam + 2) * f1.d1,
                  c * f1.value);
        EXPECT_EQ(f0.d1 * (1 - lam), c * f1.value - Rational(static_cast<long long>(L) - 1) * lam * f1.d1);
      }
}

// The relation with a plus sign in front of (L-1) lambda/(1-lambda) is not an identity.
TEST(GkzIdentities, PlusSignFails) {
  const auto r = gkz_check_identities(10, 4, 2.0);
  ASSERT_TRUE(r.matrix_plus_sign);
  EXPECT_GT(*r.matrix_plus_sign, 1e-2);
}

TEST(GkzLimit, MatchesClosedForm) {
  for (double a : {0.05, 0.3, 0.5, 0.77, 0.95})
    for (double rho : {0.01, 0.2, 0.5, 0.65, 0.99}) {
      const auto fp = gkz_limit(rho, a);
      EXPECT_NEAR(fp.flux, flux_limit_pbca(rho, a).flux, 1e-12) << a << " " << rho;
      EXPECT_GE(fp.flux, 0.0);
      EXPECT_LE(fp.flux, std::min(rho, 1 - rho) + 1e-15);
      EXPECT_EQ(fp.provenance, Provenance::Limit);
    }
}

TEST(GkzLimit, Roots) {
  const auto r = gkz_limit_roots(0.5, 0.8);
  EXPECT_NEAR(r.g_admissible, 0.1381966011250105, 1e-13);
  EXPECT_NEAR(r.flux_admissible, 0.2763932022500210, 1e-13);
  EXPECT_NEAR(r.flux_other, 0.7236067977499790, 1e-13);
  EXPECT_THROW(gkz_limit(0.0, 0.5), ParameterError);
  EXPECT_THROW(gkz_limit(0.5, 1.0), ParameterError);
}

}  // namespace
}  // namespace pca
