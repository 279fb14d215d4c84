#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fracper/errors.hpp"
#include "fracper/fode_solver.hpp"
#include "fracper/grid.hpp"
#include "fracper/product_integration.hpp"
#include "fracper/systems.hpp"

namespace fracper {

/// Impulse instants t_0 = 0 < t_1 < ... < t_p = T of one period, extended by
/// t_{k+p} = t_k + T.
class ImpulseSchedule {
public:
  ImpulseSchedule(std::vector<double> base, double period) : base_(std::move(base)), period_(period) {
    if (!(period > 0.0) || !std::isfinite(period))
      throw domain_error("ImpulseSchedule: period must be finite and > 0");
    if (base_.size() < 2)
      throw precondition_error("ImpulseSchedule: need t_0 and t_p at least");
    if (base_.front() != 0.0)
      throw precondition_error("ImpulseSchedule: t_0 must be 0");
    for (std::size_t k = 1; k < base_.size(); ++k)
      if (!(base_[k] > base_[k - 1]))
        throw precondition_error("ImpulseSchedule: times must be strictly increasing");
    if (std::abs(base_.back() - period) > 1e-12 * period)
      throw precondition_error("ImpulseSchedule: t_p must equal the period");
    base_.back() = period;
  }

  /// Schedule from a longer list of instants starting at 0; p is the number of
  /// instants in (0, T]. Every listed t_{k+p} must equal t_k + T.
  static ImpulseSchedule from_times(const std::vector<double>& times, double period) {
    if (!(period > 0.0))
      throw domain_error("ImpulseSchedule: period must be > 0");
    const double tol = 1e-9 * period;
    std::size_t p = 0;
    while (p + 1 < times.size() && times[p + 1] <= period + tol)
      ++p;
    if (p == 0)
      throw precondition_error("ImpulseSchedule: no impulse instant in (0, T]");
    for (std::size_t k = 0; k + p < times.size(); ++k)
      if (std::abs(times[k + p] - times[k] - period) > tol)
        throw precondition_error("ImpulseSchedule: instants are not T-periodic (t_{k+p} != t_k + T)");
    return ImpulseSchedule(std::vector<double>(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(p + 1)),
                           period);
  }

  [[nodiscard]] double period() const noexcept { return period_; }
  [[nodiscard]] std::size_t per_period() const noexcept { return base_.size() - 1; }
  [[nodiscard]] const std::vector<double>& base() const noexcept { return base_; }

  /// t_k for any k >= 0.
  [[nodiscard]] double time(std::size_t k) const noexcept {
    const std::size_t p = per_period();
    return base_[k % p] + static_cast<double>(k / p) * period_;
  }

private:
  std::vector<double> base_;
  double period_;
};

/// Jump that cancels the memory accumulated over [t_{k-1}, t_k]:
///
///   I_k = -1/Gamma(alpha) int_{t_{k-1}}^{t_k} (t_k - s)^{alpha-1} f(s, x(s)) ds,
///
/// evaluated with the product-trapezoid weights on the segment samples.
/// segment.grid must run from t_{k-1} to t_k.
inline State compute_impulse(const Trajectory& segment, const ImpulseSchedule& schedule, std::size_t k, double alpha,
                             const Rhs& rhs) {
  if (k == 0)
    throw precondition_error("compute_impulse: impulses are indexed from k = 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw domain_error("compute_impulse: alpha must lie in (0, 1)");
  const TimeGrid& g = segment.grid;
  const double lo = schedule.time(k - 1), hi = schedule.time(k);
  const double tol = 1e-9 * g.step();
  if (std::abs(g.t0() - lo) > tol || std::abs(g.back() - hi) > tol || segment.states.size() != g.size())
    throw coverage_error("compute_impulse: segment does not span [t_{k-1}, t_k]");

  const std::size_t dim = segment.dimension();
  const std::size_t last = g.size() - 1;
  std::vector<std::vector<double>> f(dim, std::vector<double>(g.size()));
  for (std::size_t j = 0; j < g.size(); ++j) {
    const State v = rhs(g.at(j), segment.states[j]);
    for (std::size_t c = 0; c < dim; ++c)
      f[c][j] = v[c];
  }
  const PowerKernelWeights w(alpha, g.step(), last);
  State out(dim);
  for (std::size_t c = 0; c < dim; ++c)
    out[c] = -w.integrate_trapezoid(f[c], last);
  return out;
}

struct ImpulsiveSolution {
  /// Right-continuous samples on the global grid: at an impulse instant the
  /// stored state is x(t_k^+).
  Trajectory trajectory;
  /// Global row index of every impulse instant t_k, k >= 1.
  std::vector<std::size_t> jump_rows;
  /// x(t_k^-) for each jump row.
  std::vector<State> left_limits;
  /// I_k applied at each jump row.
  std::vector<State> impulses;
};

/// Impulse policy for solve_impulsive.
enum class ImpulseMode {
  /// I_k from compute_impulse.
  memory_cancelling,
  /// I_k = 0; the memory is still restarted at every t_k.
  zero,
};

/// Impulsive Caputo system with restarted memory: on each [t_{k-1}, t_k] the
/// solution is the fresh initial-value problem with lower terminal t_{k-1}
/// and initial value x(t_{k-1}^+), and x(t_k^+) = x(t_k^-) + I_k.
///
/// All orders must be equal. Each inter-impulse gap must be a whole number of
/// steps h.
inline ImpulsiveSolution solve_impulsive(const SystemSpec& spec, const ImpulseSchedule& schedule, std::size_t periods,
                                         double h, ImpulseMode mode = ImpulseMode::memory_cancelling,
                                         const SolverOptions& opt = {}) {
  spec.validate();
  if (periods == 0)
    throw precondition_error("solve_impulsive: periods must be >= 1");
  const double alpha = spec.orders.front();
  for (double a : spec.orders)
    if (a != alpha)
      throw precondition_error("solve_impulsive: all orders must be equal");
  if (!(h > 0.0))
    throw domain_error("solve_impulsive: step must be > 0");

  // Global row of every instant.
  const std::size_t impulses = periods * schedule.per_period();
  std::vector<std::size_t> rows(impulses + 1, 0);
  for (std::size_t k = 1; k <= impulses; ++k) {
    const double steps = schedule.time(k) / h;
    const double r = std::round(steps);
    if (std::abs(steps - r) > 1e-9 * std::max(1.0, steps))
      throw precondition_error("solve_impulsive: impulse instants must lie on the step grid");
    rows[k] = static_cast<std::size_t>(r);
    if (rows[k] <= rows[k - 1])
      throw precondition_error("solve_impulsive: impulse gap shorter than one step");
  }

  const Rhs rhs = rhs_registry(spec);
  const TimeGrid global(0.0, h, rows.back() + 1);
  ImpulsiveSolution out{Trajectory{global, std::vector<State>(global.size()), spec}, {}, {}, {}};
  State start = spec.x0;
  for (std::size_t k = 1; k <= impulses; ++k) {
    const TimeGrid local(global.at(rows[k - 1]), h, rows[k] - rows[k - 1] + 1);
    Trajectory seg{local, integrate_caputo(rhs, spec.orders, start, local, opt), spec};
    State jump(spec.dimension(), 0.0);
    if (mode == ImpulseMode::memory_cancelling)
      jump = compute_impulse(seg, schedule, k, alpha, rhs);

    for (std::size_t j = 0; j + 1 < local.size(); ++j)
      out.trajectory.states[rows[k - 1] + j] = seg.states[j];
    State left = seg.states.back();
    State right = left;
    for (std::size_t c = 0; c < right.size(); ++c)
      right[c] += jump[c];
    out.trajectory.states[rows[k]] = right;
    out.jump_rows.push_back(rows[k]);
    out.left_limits.push_back(std::move(left));
    out.impulses.push_back(std::move(jump));
    start = std::move(right);
  }
  return out;
}

} // namespace fracper
