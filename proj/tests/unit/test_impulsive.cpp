#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fracper/impulsive.hpp"
#include "fracper/periodicity.hpp"

using namespace fracper;

TEST(ImpulseSchedule, PeriodicExtension) {
  const ImpulseSchedule s({0.0, 0.7, 2.0}, 2.0);
  EXPECT_EQ(s.per_period(), 2u);
  EXPECT_DOUBLE_EQ(s.time(0), 0.0);
  EXPECT_DOUBLE_EQ(s.time(1), 0.7);
  EXPECT_DOUBLE_EQ(s.time(2), 2.0);
  EXPECT_DOUBLE_EQ(s.time(3), 2.7);
  EXPECT_DOUBLE_EQ(s.time(5), 4.7);
}

TEST(ImpulseSchedule, FromTimesValidatesPeriodicity) {
  const auto s = ImpulseSchedule::from_times({0.0, 0.5, 1.0, 1.5, 2.0}, 1.0);
  EXPECT_EQ(s.per_period(), 2u);
  EXPECT_THROW(ImpulseSchedule::from_times({0.0, 0.5, 1.0, 1.6, 2.0}, 1.0), precondition_error);
  EXPECT_THROW(ImpulseSchedule({0.1, 1.0}, 1.0), precondition_error);
  EXPECT_THROW(ImpulseSchedule({0.0, 0.5, 0.4, 1.0}, 1.0), precondition_error);
  EXPECT_THROW(ImpulseSchedule({0.0, 0.9}, 1.0), precondition_error);
}

namespace {

Trajectory constant_segment(double t0, double t1, double h, double value) {
  const TimeGrid g = TimeGrid::spanning(t0, t1, h);
  return Trajectory{g, std::vector<State>(g.size(), State{value}), SystemSpec{"constant", {}, {0.5}, {value}}};
}

} // namespace

TEST(ComputeImpulse, ZeroAndConstantForcing) {
  const ImpulseSchedule s({0.0, 1.5}, 1.5);
  const auto seg = constant_segment(0.0, 1.5, 0.01, 0.3);
  EXPECT_EQ(compute_impulse(seg, s, 1, 0.5, rhs_registry("constant", {0.0}, 1))[0], 0.0);
  const double c = 2.0, a = 0.6;
  const double got = compute_impulse(seg, s, 1, a, rhs_registry("constant", {c}, 1))[0];
  EXPECT_NEAR(got, -c * std::pow(1.5, a) / std::tgamma(a + 1.0), 1e-13);
}

TEST(ComputeImpulse, CoverageAndOrderErrors) {
  const ImpulseSchedule s({0.0, 1.0}, 1.0);
  const Rhs f = rhs_registry("constant", {1.0}, 1);
  EXPECT_THROW(compute_impulse(constant_segment(0.0, 0.8, 0.01, 0.0), s, 1, 0.5, f), coverage_error);
  EXPECT_THROW(compute_impulse(constant_segment(0.0, 1.0, 0.01, 0.0), s, 2, 0.5, f), coverage_error);
  EXPECT_THROW(compute_impulse(constant_segment(0.0, 1.0, 0.01, 0.0), s, 1, 1.2, f), domain_error);
}

TEST(ComputeImpulse, Nn2SegmentConvergesUnderRefinement) {
  // Richardson limit of the impulse over [0, 1] as the segment step is refined.
  const SystemSpec spec{"nn2", {}, {0.5, 0.5}, {0.1, 0.1}};
  const ImpulseSchedule s({0.0, 1.0}, 1.0);
  auto impulse = [&](double h) {
    const TimeGrid g = TimeGrid::spanning(0.0, 1.0, h);
    const Trajectory seg = solve_caputo(spec, g);
    return compute_impulse(seg, s, 1, 0.5, rhs_registry(spec));
  };
  const State coarse = impulse(0.0025), mid = impulse(0.000625), fine = impulse(0.0003125);
  for (std::size_t c = 0; c < 2; ++c) {
    const double p = 1.5;
    const double limit = fine[c] + (fine[c] - mid[c]) / (std::pow(2.0, p) - 1.0);
    EXPECT_NEAR(coarse[c], limit, 1e-4) << c;
  }
}

TEST(SolveImpulsive, ZeroRhsIsConstant) {
  const SystemSpec spec{"constant", {0.0}, {0.5}, {1.5}};
  const auto sol = solve_impulsive(spec, ImpulseSchedule({0.0, 1.0}, 1.0), 3, 0.01);
  for (const auto& s : sol.trajectory.states)
    EXPECT_EQ(s[0], 1.5);
  for (const auto& i : sol.impulses)
    EXPECT_EQ(i[0], 0.0);
}

TEST(SolveImpulsive, ForcedSystemBecomesPeriodic) {
  const double T = 2.0 * std::numbers::pi;
  const double h = T / 400.0;
  const SystemSpec spec{"forced_periodic", {1.0, T, 0.0}, {0.5}, {0.2}};
  const auto sol = solve_impulsive(spec, ImpulseSchedule({0.0, T}, T), 6, h);
  const auto r = periodicity_residual(sol.trajectory, T, 5);
  for (double v : r)
    EXPECT_LE(v, 5e-3);

  const auto zero = solve_impulsive(spec, ImpulseSchedule({0.0, T}, T), 6, h, ImpulseMode::zero);
  const auto rz = periodicity_residual(zero.trajectory, T, 5);
  EXPECT_GE(rz.front(), 10.0 * r.front());
}

TEST(SolveImpulsive, DampedTwoImpulsesPerPeriod) {
  const double T = 2.0;
  const SystemSpec spec{"forced_periodic", {1.0, T, 0.5}, {0.7, 0.7}, {0.3, -0.2}};
  const ImpulseSchedule sched({0.0, 0.7, 2.0}, T);
  const auto sol = solve_impulsive(spec, sched, 5, 0.01);
  ASSERT_EQ(sol.jump_rows.size(), 10u);
  EXPECT_EQ(sol.jump_rows[0], 70u);
  EXPECT_EQ(sol.jump_rows[1], 200u);

  // Left and right limits differ by exactly the impulse.
  for (std::size_t k = 0; k < sol.jump_rows.size(); ++k)
    for (std::size_t c = 0; c < 2; ++c)
      EXPECT_EQ(sol.trajectory.states[sol.jump_rows[k]][c], sol.left_limits[k][c] + sol.impulses[k][c]);

  // Impulses repeat with period p once locked on.
  for (std::size_t k = 4; k + 2 < sol.impulses.size(); ++k)
    for (std::size_t c = 0; c < 2; ++c)
      EXPECT_NEAR(sol.impulses[k + 2][c], sol.impulses[k][c], 1e-3);

  for (double v : periodicity_residual(sol.trajectory, T, 4))
    EXPECT_LE(v, 5e-3);
}

TEST(SolveImpulsive, Preconditions) {
  const ImpulseSchedule s({0.0, 1.0}, 1.0);
  EXPECT_THROW(solve_impulsive(SystemSpec{"nn2", {}, {0.5, 0.6}, {0.1, 0.1}}, s, 2, 0.01), precondition_error);
  EXPECT_THROW(solve_impulsive(SystemSpec{"constant", {}, {0.5}, {0.0}}, s, 2, 0.3), precondition_error);
  EXPECT_THROW(solve_impulsive(SystemSpec{"constant", {}, {0.5}, {0.0}}, s, 0, 0.01), precondition_error);
}
