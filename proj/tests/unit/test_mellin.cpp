#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "fracper/gamma.hpp"
#include "fracper/mellin.hpp"
#include "oracles.hpp"

using namespace fracper;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double two_pi = 2.0 * std::numbers::pi;

std::vector<cplx> strip_samples(double w) {
  std::vector<cplx> zs;
  for (double r : {0.2, 0.4, 0.6, 0.8})
    for (double im : {-2.0, -1.0, 0.0, 1.0, 2.0})
      zs.emplace_back(r * w, im);
  return zs;
}

} // namespace

TEST(MellinNumeric, ExponentialGivesGamma) {
  const MellinDomain d{{0.0, inf}};
  for (cplx z : {cplx(1, 0), cplx(2, 0), cplx(3, 0), cplx(0.5, 1)})
    EXPECT_LE(std::abs(mellin_numeric([](double t) { return std::exp(-t); }, z, d) - gamma(z)), 1e-6) << z;
}

TEST(MellinNumeric, Indicator) {
  const MellinDomain d{{0.0, inf}, 1.0};
  EXPECT_NEAR(mellin_numeric([](double) { return 1.0; }, cplx(3.0, 0.0), d).real(), 1.0 / 3.0, 1e-14);
}

TEST(MellinNumeric, StripViolation) {
  const MellinDomain d{{0.0, 1.0}};
  EXPECT_THROW(mellin_numeric([](double t) { return std::exp(-t); }, cplx(1.5, 0.0), d), strip_error);
  EXPECT_THROW(mellin_numeric([](double t) { return std::exp(-t); }, cplx(-0.1, 0.0), d), strip_error);
}

TEST(MellinNumeric, SlowTailIsNotCertified) {
  // t^{z-1}/(1+t)^{0.1} at Re z = 0.099 decays too slowly to vanish before 1e300.
  const MellinDomain d{{0.0, inf}};
  EXPECT_THROW(mellin_numeric([](double t) { return std::pow(1 + t, -0.1); }, cplx(0.099, 0.0), d),
               convergence_error);
}

TEST(MellinNumeric, SampledCosineOnOnePeriod) {
  const TimeGrid g(0.0, two_pi / 4000.0, 4001);
  const auto f = SampledFunction::sample(g, [](double t) { return std::cos(t); });
  EXPECT_NEAR(mellin_numeric(f, cplx(0.5, 0.0)).real(), oracle::mellin_cos_2pi_half, 1e-6);
  const cplx h = mellin_numeric(f, cplx(0.75, 2.5));
  EXPECT_LT(std::abs(h - oracle::h_cos_0p75_p2p5i), 1e-6);
  EXPECT_THROW(mellin_numeric(f, cplx(0.0, 1.0)), strip_error);
}

TEST(KernelMellin, ClosedFormValues) {
  EXPECT_NEAR(g_kernel_mellin_closed(0.5, cplx(0.25, 0.0)).real(), oracle::g_kernel_half_quarter, 1e-12);
  const cplx v = g_kernel_mellin_closed(0.5, cplx(0.25, 1.0));
  EXPECT_NEAR(v.real(), oracle::g_kernel_half_quarter_plus_i, 1e-13);
  EXPECT_NEAR(v.imag(), 0.0, 1e-13);
  EXPECT_THROW(g_kernel_mellin_closed(0.5, cplx(0.5, 0.0)), strip_error);
  EXPECT_THROW(g_kernel_mellin_closed(0.5, cplx(0.0, 0.0)), strip_error);
  EXPECT_GT(std::abs(g_kernel_mellin_closed(0.5, cplx(1e-8, 0.0))), 1e7);
}

TEST(KernelMellin, TruncatedAtTenThousand) {
  const cplx z(0.25, 0.0);
  const cplx truncated = kernel_mellin_numeric(0.5, z, 1e4);
  EXPECT_NEAR(truncated.real(), oracle::kernel_half_quarter_truncated_1e4, 1e-10);
  // The missing tail is large here; the analytic bound covers it.
  const double gap = std::abs(g_kernel_mellin_closed(0.5, z) - truncated);
  EXPECT_GT(gap, 0.3);
  EXPECT_LE(gap, kernel_tail_bound(0.5, z, 1e4));
}

TEST(KernelMellin, QuadratureMatchesClosedFormOnStrip) {
  for (double alpha : {0.3, 0.5, 1.7}) {
    const double w = alpha - std::floor(alpha);
    for (cplx z : strip_samples(w))
      EXPECT_LE(std::abs(kernel_mellin_numeric(alpha, z) - g_kernel_mellin_closed(alpha, z)), 1e-4)
          << alpha << " " << z;
  }
}

TEST(KernelMellin, ReflectedKernelNonZeroOnProofStrip) {
  const StripWindow win{0.6, 0.9, 5, 5.0, 5};
  double smallest = inf;
  for (cplx z : win.points())
    smallest = std::min(smallest, std::abs(g_kernel_mellin_closed(0.5, 1.0 - z)));
  EXPECT_GT(smallest, 0.0);
}

TEST(HFunction, Reflections) {
  const double T = two_pi;
  auto h = h_function([](double t) { return std::cos(t); }, T);
  for (double u : {0.0, 0.3, 2.0, 6.0})
    EXPECT_NEAR(h(u), std::cos(u), 1e-14);
  EXPECT_EQ(h(T + 0.1), 0.0);

  auto h2 = h_function([](double t) { return 2.0 * std::cos(2.0 * t); }, std::numbers::pi);
  for (double u : {0.0, 0.4, 1.7})
    EXPECT_NEAR(h2(u), 2.0 * std::cos(2.0 * u), 1e-14);

  const TimeGrid g(0.0, T / 100.0, 151);
  const auto xn = SampledFunction::sample(g, [](double t) { return std::cos(t); });
  const auto hs = h_function(xn, T);
  ASSERT_EQ(hs.grid.size(), 101u);
  for (std::size_t i = 0; i < hs.grid.size(); ++i)
    EXPECT_NEAR(hs.values[i], std::cos(hs.grid.at(i)), 1e-13);
  const auto zero = h_function(SampledFunction::sample(g, [](double) { return 0.0; }), T);
  for (double v : zero.values)
    EXPECT_EQ(v, 0.0);
  EXPECT_THROW(h_function(xn, 2.0 * T), coverage_error);
}

TEST(HTransform, MatchesOracle) {
  const TrigPolynomial s{two_pi, 0.0, {}, {1.0}};
  EXPECT_NEAR(h_transform(s, 1, cplx(0.6, 0.0)).real(), oracle::h_cos_0p6, 1e-12);
  EXPECT_LT(std::abs(h_transform(s, 1, cplx(0.75, 2.5)) - oracle::h_cos_0p75_p2p5i), 1e-12);
  EXPECT_LT(std::abs(h_transform(s, 1, cplx(0.9, -5.0)) - oracle::h_cos_0p9_m5i), 1e-12);
}

TEST(ConvolutionIdentity, Examples) {
  const MellinFunction g{[](double t) { return std::pow(1.0 + t, -1.5); }, {{0.0, 1.5}}};
  const MellinFunction h{[](double t) { return std::cos(t); }, {{0.0, inf}, two_pi, 0.5}};
  EXPECT_LE(convolution_identity_residual(g, h, cplx(0.5, 0.0)), 1e-3);
  EXPECT_LE(convolution_identity_residual(g, h, cplx(0.3, 0.7)), 1e-3);

  const MellinFunction zero{[](double) { return 0.0; }, {{0.0, inf}, two_pi}};
  EXPECT_EQ(convolution_identity_residual(g, zero, cplx(0.5, 0.0)), 0.0);

  EXPECT_THROW(convolution_identity_residual(g, h, cplx(1.6, 0.0)), strip_error);
  EXPECT_THROW(convolution_identity_residual(g, h, cplx(1.2, 0.0)), strip_error); // 1 - z leaves S_h
}

TEST(ProofWitness, ConstantAndPeriodicInputs) {
  const StripWindow win{0.6, 0.9, 5, 5.0, 5};
  const auto flat = proof_witness(TrigPolynomial{two_pi, 1.0, {}, {}}, 0.5, win);
  EXPECT_LE(flat.max_abs_h, 1e-10);
  EXPECT_EQ(flat.z.size(), 25u);

  const auto sine = proof_witness(TrigPolynomial{two_pi, 0.0, {}, {1.0}}, 0.5, win);
  EXPECT_GT(sine.min_abs_h, 0.01);
  EXPECT_NEAR(sine.min_abs_h, oracle::witness_min_h_sin, 1e-10);
  EXPECT_GT(sine.min_abs_g, 0.0);

  const auto sin2 = proof_witness(TrigPolynomial{std::numbers::pi, 0.0, {}, {1.0}}, 0.5, win);
  EXPECT_GT(sin2.min_abs_h, 0.0);
  EXPECT_NEAR(sin2.min_abs_h, oracle::witness_min_h_sin2t, 1e-10);

  EXPECT_THROW(proof_witness(TrigPolynomial{}, 0.5, StripWindow{0.4, 0.9, 5, 5.0, 5}), strip_error);
  EXPECT_THROW(proof_witness(TrigPolynomial{}, 0.5, StripWindow{0.9, 0.6, 5, 5.0, 5}), domain_error);
}

TEST(ProofWitness, OrderAboveOneUsesSecondDerivative) {
  const StripWindow win{0.45, 0.9, 3, 2.0, 3}; // n - alpha = 0.3
  const auto rep = proof_witness(TrigPolynomial{two_pi, 0.0, {}, {1.0}}, 1.7, win);
  EXPECT_EQ(rep.n, 2);
  EXPECT_GT(rep.min_abs_h, 0.0);
}

TEST(TrigPolynomial, Derivatives) {
  const TrigPolynomial p{two_pi, 0.5, {1.0, -0.3}, {0.2}};
  const double t = 0.7;
  EXPECT_NEAR(p(t), 0.5 + std::cos(t) - 0.3 * std::cos(2 * t) + 0.2 * std::sin(t), 1e-15);
  EXPECT_NEAR(p.derivative(t, 1), -std::sin(t) + 0.6 * std::sin(2 * t) + 0.2 * std::cos(t), 1e-14);
  EXPECT_NEAR(p.derivative(t, 2), -std::cos(t) + 1.2 * std::cos(2 * t) - 0.2 * std::sin(t), 1e-14);
  EXPECT_FALSE(p.is_constant());
  EXPECT_TRUE((TrigPolynomial{two_pi, 3.0, {0.0}, {}}.is_constant()));
}
