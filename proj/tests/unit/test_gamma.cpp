#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fracper/gamma.hpp"
#include "oracles.hpp"

using namespace fracper;

namespace {

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

} // namespace

TEST(Gamma, ElementaryValues) {
  EXPECT_NEAR(gamma(cplx(1.0, 0.0)).real(), 1.0, 1e-14);
  EXPECT_NEAR(gamma(cplx(0.5, 0.0)).real(), std::sqrt(std::numbers::pi), 1e-13);
  EXPECT_NEAR(gamma(cplx(3.7, 0.0)).real(), oracle::gamma_3_7, 1e-12 * oracle::gamma_3_7);
  EXPECT_NEAR(gamma(cplx(3.7, 0.0)).imag(), 0.0, 1e-15);
}

TEST(Gamma, ComplexArgumentsMatchOracleTo12Digits) {
  EXPECT_LT(rel(gamma(cplx(0.5, 1.0)), oracle::gamma_half_plus_i), 1e-12);
  EXPECT_LT(rel(gamma(cplx(-3.3, 2.5)), oracle::gamma_m3_3_p2_5i), 1e-12);
  EXPECT_LT(rel(gamma(cplx(12.5, -7.25)), oracle::gamma_12_5_m7_25i), 1e-12);
  EXPECT_LT(rel(gamma(cplx(-19.6, 0.3)), oracle::gamma_m19_6_p0_3i), 1e-12);
  EXPECT_LT(rel(gamma(cplx(19.5, 19.5)), oracle::gamma_19_5_p19_5i), 1e-12);
  EXPECT_LT(rel(gamma(cplx(0.1, -20.0)), oracle::gamma_0_1_m20i), 1e-12);
}

TEST(Gamma, RecurrenceOnTestDomain) {
  // Gamma(z + 1) = z Gamma(z) across |Re z| <= 19, |Im z| <= 20.
  for (double re = -18.65; re <= 19.0; re += 1.9)
    for (double im = -20.0; im <= 20.0; im += 2.5) {
      const cplx z(re, im);
      EXPECT_LT(rel(gamma(z + 1.0), z * gamma(z)), 1e-12) << z;
    }
}

TEST(Gamma, ConjugateSymmetry) {
  const cplx z(2.3, 4.1);
  EXPECT_LT(rel(gamma(std::conj(z)), std::conj(gamma(z))), 1e-15);
}

TEST(Gamma, PolesThrow) {
  for (double p : {0.0, -1.0, -2.0, -17.0}) {
    EXPECT_THROW(gamma(cplx(p, 0.0)), pole_error);
    EXPECT_THROW(fracper::gamma(p), pole_error);
  }
  EXPECT_NO_THROW(gamma(cplx(-2.0, 1e-3)));
}

TEST(Gamma, ReciprocalVanishesAtPoles) {
  EXPECT_EQ(rgamma(0.0), 0.0);
  EXPECT_EQ(rgamma(-3.0), 0.0);
  EXPECT_NEAR(rgamma(0.5), 1.0 / std::sqrt(std::numbers::pi), 1e-15);
}
