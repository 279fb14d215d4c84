#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <vector>

#include "fracper/errors.hpp"
#include "fracper/fode_solver.hpp"
#include "fracper/frac_operators.hpp"
#include "fracper/grid.hpp"
#include "fracper/mittag_leffler.hpp"
#include "fracper/systems.hpp"

namespace fracper {

namespace detail {

inline std::size_t period_in_steps(double period, double h) {
  if (!(period > 0.0) || !std::isfinite(period))
    throw domain_error("period must be finite and > 0");
  const double steps = period / h;
  const double r = std::round(steps);
  if (r < 1.0 || std::abs(steps - r) > 1e-9 * steps)
    throw precondition_error("period must be a whole number of grid steps");
  return static_cast<std::size_t>(r);
}

} // namespace detail

/// Rounds a period to the nearest whole number of steps (at least one).
inline double align_period(double period, double h) { return std::max(1.0, std::round(period / h)) * h; }

/// Cycle residuals r_k = max_{t in [t_s + kT, t_s + (k+1)T]} |x(t + T) - x(t)|,
/// k = 0..cycles-1, max over components. Rows are samples at step h, first row
/// at t_s. T must be a whole number of steps and the rows must reach
/// t_s + (cycles + 1) T.
inline std::vector<double> periodicity_residual(const std::vector<State>& rows, double h, double period,
                                                std::size_t cycles) {
  const std::size_t m = detail::period_in_steps(period, h);
  if (rows.empty() || (cycles + 1) * m > rows.size() - 1)
    throw coverage_error("periodicity_residual: samples do not cover cycles + 1 periods");
  std::vector<double> r(cycles, 0.0);
  for (std::size_t k = 0; k < cycles; ++k)
    for (std::size_t i = k * m; i <= (k + 1) * m; ++i)
      for (std::size_t c = 0; c < rows[i].size(); ++c)
        r[k] = std::max(r[k], std::abs(rows[i + m][c] - rows[i][c]));
  return r;
}

namespace detail {

inline std::vector<State> rows_from(const Trajectory& x, double t_start) {
  const std::size_t first = x.grid.index_of(t_start);
  return {x.states.begin() + static_cast<std::ptrdiff_t>(first), x.states.end()};
}

inline std::vector<State> rows_from(const SampledFunction& x, double t_start) {
  std::vector<State> out;
  for (std::size_t j = x.grid.index_of(t_start); j < x.grid.size(); ++j)
    out.push_back(State{x.values[j]});
  return out;
}

} // namespace detail

inline std::vector<double> periodicity_residual(const Trajectory& x, double period, std::size_t cycles,
                                                double t_start = 0.0) {
  return periodicity_residual(detail::rows_from(x, t_start), x.grid.step(), period, cycles);
}

inline std::vector<double> periodicity_residual(const SampledFunction& x, double period, std::size_t cycles,
                                                double t_start = 0.0) {
  return periodicity_residual(detail::rows_from(x, t_start), x.grid.step(), period, cycles);
}

struct PeriodicityReport {
  double candidate_period = 0.0;
  std::vector<double> residual_per_cycle;
  /// Residuals strictly decrease (or the data is exactly periodic).
  bool asymptotic_flag = false;
  /// Every residual is within exact_tolerance.
  bool exact_flag = false;
  /// rel_tol times the largest half peak-to-peak amplitude over the window.
  double exact_tolerance = 0.0;
};

inline PeriodicityReport analyze_periodicity(const std::vector<State>& rows, double h, double period,
                                             std::size_t cycles, double rel_tol = 1e-6) {
  PeriodicityReport rep;
  rep.candidate_period = period;
  rep.residual_per_cycle = periodicity_residual(rows, h, period, cycles);
  double amplitude = 0.0;
  for (std::size_t c = 0; c < rows.front().size(); ++c) {
    double lo = rows.front()[c], hi = lo;
    for (const State& s : rows) {
      lo = std::min(lo, s[c]);
      hi = std::max(hi, s[c]);
    }
    amplitude = std::max(amplitude, 0.5 * (hi - lo));
  }
  rep.exact_tolerance = rel_tol * amplitude;
  rep.exact_flag = std::all_of(rep.residual_per_cycle.begin(), rep.residual_per_cycle.end(),
                               [&](double r) { return r <= rep.exact_tolerance; });
  bool decreasing = !rep.residual_per_cycle.empty();
  for (std::size_t k = 1; k < rep.residual_per_cycle.size(); ++k)
    decreasing = decreasing && rep.residual_per_cycle[k] < rep.residual_per_cycle[k - 1];
  rep.asymptotic_flag = rep.exact_flag || decreasing;
  return rep;
}

inline PeriodicityReport analyze_periodicity(const Trajectory& x, double period, std::size_t cycles,
                                             double t_start = 0.0, double rel_tol = 1e-6) {
  return analyze_periodicity(detail::rows_from(x, t_start), x.grid.step(), period, cycles, rel_tol);
}

inline PeriodicityReport analyze_periodicity(const SampledFunction& x, double period, std::size_t cycles,
                                             double t_start = 0.0, double rel_tol = 1e-6) {
  return analyze_periodicity(detail::rows_from(x, t_start), x.grid.step(), period, cycles, rel_tol);
}

/// Dominant period from the normalized autocorrelation of the samples.
///
/// The first local maximum above 0.5 at a lag beyond 10 steps is taken and
/// refined by a parabola through its neighbours. Components are pooled.
inline double estimate_period(const std::vector<State>& rows, double h) {
  const std::size_t n = rows.size();
  if (n < 24)
    throw insufficient_samples_error("estimate_period: too few samples");
  const std::size_t dim = rows.front().size();
  std::vector<std::vector<double>> s(dim, std::vector<double>(n));
  for (std::size_t c = 0; c < dim; ++c) {
    double mean = 0.0;
    for (const State& r : rows)
      mean += r[c];
    mean /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
      s[c][i] = rows[i][c] - mean;
  }

  auto ac = [&](std::size_t lag) {
    double num = 0.0, e0 = 0.0, e1 = 0.0;
    for (std::size_t c = 0; c < dim; ++c)
      for (std::size_t i = 0; i + lag < n; ++i) {
        num += s[c][i] * s[c][i + lag];
        e0 += s[c][i] * s[c][i];
        e1 += s[c][i + lag] * s[c][i + lag];
      }
    const double den = std::sqrt(e0 * e1);
    return den > 0.0 ? num / den : 0.0;
  };

  const std::size_t max_lag = n / 2;
  double prev = ac(10), cur = ac(11);
  for (std::size_t lag = 11; lag < max_lag; ++lag) {
    const double next = ac(lag + 1);
    if (cur > 0.5 && cur >= prev && cur > next) {
      const double denom = prev - 2.0 * cur + next;
      const double shift = denom != 0.0 ? 0.5 * (prev - next) / denom : 0.0;
      return (static_cast<double>(lag) + shift) * h;
    }
    prev = cur;
    cur = next;
  }
  throw no_oscillation_error("estimate_period: no autocorrelation peak above 0.5");
}

/// Period estimate on a trajectory after discarding the transient; t_min
/// defaults to 30% of the horizon.
inline double estimate_period(const Trajectory& x, std::optional<double> t_min = std::nullopt) {
  const double start = t_min.value_or(x.grid.t0() + 0.3 * (x.grid.back() - x.grid.t0()));
  return estimate_period(detail::rows_from(x, start), x.grid.step());
}

struct DerivativePeriodicityOptions {
  std::size_t samples_per_period = 2000;
  double rel_tol = 1e-6;
};

/// True when x is non-constant and x, x', ..., x^(k_max) are all T-periodic,
/// judged on samples over three periods with finite-difference derivatives.
inline bool integer_derivative_periodicity_check(const std::function<double(double)>& x, double period, int k_max,
                                                 const DerivativePeriodicityOptions& opt = {}) {
  if (k_max < 0)
    throw domain_error("integer_derivative_periodicity_check: k_max must be >= 0");
  if (!(period > 0.0))
    throw domain_error("integer_derivative_periodicity_check: period must be > 0");
  const std::size_t m = opt.samples_per_period;
  const double h = period / static_cast<double>(m);
  // Margin of k_max points each side keeps the one-sided end stencils out of the window.
  const std::size_t pad = static_cast<std::size_t>(k_max) + 1;
  const std::size_t count = 2 * m + 1 + 2 * pad;
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = x((static_cast<double>(i) - static_cast<double>(pad)) * h);

  double base_amp = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    const std::vector<double> d = finite_difference_derivative(v, h, k);
    double lo = d[pad], hi = d[pad], r = 0.0;
    for (std::size_t i = pad; i <= pad + m; ++i) {
      lo = std::min(lo, d[i]);
      hi = std::max(hi, d[i]);
      r = std::max(r, std::abs(d[i + m] - d[i]));
    }
    const double amp = 0.5 * (hi - lo);
    if (k == 0) {
      base_amp = amp;
      if (!(amp > 1e-12 * std::max(1.0, std::abs(v[pad]))))
        return false;
    }
    // Finite-difference roundoff grows like eps / h^k; keep it out of the decision.
    const double floor = 1e-13 * std::max(1.0, base_amp) / std::pow(h, k);
    if (r > opt.rel_tol * std::max(amp, base_amp) + floor)
      return false;
  }
  return true;
}

struct DeviationCurve {
  std::vector<double> t;
  /// |D^alpha sin(t) - sin(t + alpha pi / 2)|.
  std::vector<double> deviation;
  /// Max deviation over each window [2 pi k, 2 pi (k + 1)).
  std::vector<double> window_max;
};

/// Distance of the Caputo derivative of sin from its asymptotic phase-shifted
/// sine, for alpha in (0, 1). The horizon must cover at least 10 periods.
inline double phase_deviation(double alpha, double t) {
  return std::abs(caputo_sin_closed_form(alpha, t) - std::sin(t + alpha * std::numbers::pi / 2.0));
}

inline DeviationCurve asymptotic_phase_check(double alpha, double horizon, double step = 0.01) {
  if (!(horizon >= 20.0 * std::numbers::pi))
    throw precondition_error("asymptotic_phase_check: horizon must be at least 20 pi");
  if (!(step > 0.0))
    throw domain_error("asymptotic_phase_check: step must be > 0");
  DeviationCurve out;
  const double window = 2.0 * std::numbers::pi;
  for (std::size_t j = 1;; ++j) {
    const double t = static_cast<double>(j) * step;
    if (t > horizon)
      break;
    const double d = phase_deviation(alpha, t);
    out.t.push_back(t);
    out.deviation.push_back(d);
    const auto w = static_cast<std::size_t>(t / window);
    if (w >= out.window_max.size())
      out.window_max.resize(w + 1, 0.0);
    out.window_max[w] = std::max(out.window_max[w], d);
  }
  return out;
}

} // namespace fracper
