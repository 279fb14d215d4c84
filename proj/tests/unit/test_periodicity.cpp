#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fracper/frac_operators.hpp"
#include "fracper/mittag_leffler.hpp"
#include "fracper/periodicity.hpp"

using namespace fracper;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

TimeGrid cycle_grid(std::size_t per_cycle, std::size_t cycles) {
  return TimeGrid(0.0, two_pi / static_cast<double>(per_cycle), per_cycle * cycles + 1);
}

} // namespace

TEST(PeriodicityResidual, ExactlyPeriodicSine) {
  const TimeGrid g = cycle_grid(1000, 6);
  const auto x = SampledFunction::sample(g, [](double t) { return std::sin(t); });
  const auto rep = analyze_periodicity(x, two_pi, 5);
  for (double r : rep.residual_per_cycle)
    EXPECT_LE(r, 1e-9);
  EXPECT_TRUE(rep.exact_flag);
  EXPECT_TRUE(rep.asymptotic_flag);
}

TEST(PeriodicityResidual, ConstantSignal) {
  const TimeGrid g = cycle_grid(100, 4);
  const auto x = SampledFunction::sample(g, [](double) { return 3.0; });
  const auto rep = analyze_periodicity(x, two_pi, 3);
  for (double r : rep.residual_per_cycle)
    EXPECT_EQ(r, 0.0);
  EXPECT_TRUE(rep.exact_flag);
  EXPECT_TRUE(rep.asymptotic_flag);
}

TEST(PeriodicityResidual, CaputoSinClosedFormIsNotPeriodic) {
  const TimeGrid g = cycle_grid(200, 6);
  std::vector<double> v(g.size());
  v[0] = 0.0; // t^{1/2} E_{2,3/2}(-t^2) -> 0 as t -> 0+
  for (std::size_t j = 1; j < g.size(); ++j)
    v[j] = caputo_sin_closed_form(0.5, g.at(j));
  const auto rep = analyze_periodicity(SampledFunction(g, v), two_pi, 5);
  EXPECT_GT(rep.residual_per_cycle[0], 0.05);
  for (std::size_t k = 1; k < rep.residual_per_cycle.size(); ++k)
    EXPECT_LT(rep.residual_per_cycle[k], rep.residual_per_cycle[k - 1]);
  EXPECT_TRUE(rep.asymptotic_flag);
  EXPECT_FALSE(rep.exact_flag);
}

TEST(PeriodicityResidual, ShiftInvariance) {
  const TimeGrid g = cycle_grid(300, 4);
  auto f = [](double t) { return std::sin(t) + 0.1 * t * std::exp(-t / 5); };
  const auto a = periodicity_residual(SampledFunction::sample(g, f), two_pi, 3);
  const auto b = periodicity_residual(SampledFunction::sample(g, [&](double t) { return f(t) + 0.75; }), two_pi, 3);
  for (std::size_t k = 0; k < a.size(); ++k)
    EXPECT_NEAR(a[k], b[k], 1e-14);
}

TEST(PeriodicityResidual, Preconditions) {
  const TimeGrid g = cycle_grid(100, 3);
  const auto x = SampledFunction::sample(g, [](double t) { return std::sin(t); });
  EXPECT_THROW(periodicity_residual(x, two_pi, 3), coverage_error);
  EXPECT_NO_THROW(periodicity_residual(x, two_pi, 2));
  EXPECT_THROW(periodicity_residual(x, two_pi * 1.001, 1), precondition_error);
  EXPECT_DOUBLE_EQ(align_period(0.1234, 0.01), 0.12);
}

TEST(PeriodicityWitness, FractionalDerivativeBreaksPeriodicity) {
  const TimeGrid g = cycle_grid(2000, 2);
  const auto x = SampledFunction::sample_with_derivatives(
      g, [](double t) { return std::sin(t); }, [](double t) { return std::cos(t); });
  const auto integer = caputo_derivative(x, FractionalOrder::comparison(1.0));
  EXPECT_LE(periodicity_residual(integer, two_pi, 1)[0], 1e-9);
  for (double a : {0.3, 0.5, 0.7}) {
    const auto d = caputo_derivative(x, FractionalOrder(a));
    EXPECT_GT(periodicity_residual(d, two_pi, 1)[0], 0.01) << a;
  }
}

TEST(EstimatePeriod, Sinusoids) {
  const double h = 0.01;
  const TimeGrid g(0.0, h, 6001);
  const auto s = SampledFunction::sample(g, [](double t) { return std::sin(t); });
  std::vector<State> rows;
  for (double v : s.values)
    rows.push_back({v});
  EXPECT_NEAR(estimate_period(rows, h), two_pi, 2 * h);

  rows.clear();
  for (std::size_t j = 0; j < g.size(); ++j)
    rows.push_back({std::sin(3 * g.at(j)) + 0.2});
  EXPECT_NEAR(estimate_period(rows, h), two_pi / 3, 2 * h);
}

TEST(EstimatePeriod, TrajectoryOverloadDropsTransient) {
  const TimeGrid g(0.0, 0.02, 5001);
  std::vector<State> states;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double t = g.at(j);
    states.push_back({std::exp(-t) * 5.0 + std::cos(2.0 * t), std::sin(2.0 * t)});
  }
  const Trajectory tr{g, states, SystemSpec{}};
  EXPECT_NEAR(estimate_period(tr), std::numbers::pi, 0.04);
  EXPECT_NEAR(estimate_period(tr, 20.0), std::numbers::pi, 0.04);
}

TEST(EstimatePeriod, NoOscillation) {
  std::vector<State> rows;
  for (int i = 0; i < 1000; ++i)
    rows.push_back({0.01 * i});
  EXPECT_THROW(estimate_period(rows, 0.01), no_oscillation_error);
  std::vector<State> flat(1000, State{1.0});
  EXPECT_THROW(estimate_period(flat, 0.01), no_oscillation_error);
}

TEST(IntegerDerivativeCheck, Examples) {
  EXPECT_TRUE(integer_derivative_periodicity_check([](double t) { return std::sin(t); }, two_pi, 3));
  EXPECT_FALSE(integer_derivative_periodicity_check([](double t) { return t + std::sin(t); }, two_pi, 3));
  EXPECT_FALSE(integer_derivative_periodicity_check([](double t) { return std::sin(t); }, std::numbers::pi, 3));
  EXPECT_FALSE(integer_derivative_periodicity_check([](double) { return 2.0; }, two_pi, 2));
}

TEST(AsymptoticPhase, DeviationDecays) {
  const auto curve = asymptotic_phase_check(0.5, 20.0 * std::numbers::pi);
  EXPECT_LT(phase_deviation(0.5, 50.0), phase_deviation(0.5, 5.0) / 10.0);
  EXPECT_EQ(curve.window_max.size(), 10u);
  EXPECT_LT(curve.window_max[9], curve.window_max[1]);
  EXPECT_TRUE(std::isfinite(curve.deviation.front()));
  EXPECT_LT(curve.deviation.front(), 2.0);
  EXPECT_THROW(asymptotic_phase_check(0.5, 50.0), precondition_error);
}

TEST(AsymptoticPhase, UnitOrderLimit) {
  for (double t : {0.5, 3.0, 17.0})
    EXPECT_LT(phase_deviation(1.0 - 1e-10, t), 1e-8);
}
