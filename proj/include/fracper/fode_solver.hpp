#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracper/errors.hpp"
#include "fracper/grid.hpp"
#include "fracper/product_integration.hpp"
#include "fracper/systems.hpp"

namespace fracper {

/// Sampled solution: states[j] is x(t_j).
struct Trajectory {
  TimeGrid grid;
  std::vector<State> states;
  SystemSpec spec;

  [[nodiscard]] std::size_t dimension() const noexcept { return states.empty() ? 0 : states.front().size(); }

  [[nodiscard]] std::vector<double> component(std::size_t c) const {
    std::vector<double> out(states.size());
    for (std::size_t j = 0; j < states.size(); ++j)
      out[j] = states[j][c];
    return out;
  }
};

struct SolverOptions {
  /// Corrector passes per step (1 = classical PECE).
  int corrector_iterations = 1;
  /// Max-norm bound beyond which the solve is declared divergent.
  double divergence_bound = 1e6;
};

/// Fractional Adams-Bashforth-Moulton for D^{alpha_i} x_i = f_i(t, x) with the
/// lower terminal at grid.t0(), in Volterra form
///
///   x(t) = x0 + 1/Gamma(alpha) int_{t0}^t (t - s)^{alpha-1} f(s, x(s)) ds,
///
/// component-wise orders. Predictor: product rectangle rule; corrector:
/// product trapezoid rule. Full history, O(N^2).
inline std::vector<State> integrate_caputo(const Rhs& rhs, const std::vector<double>& orders, const State& x0,
                                           const TimeGrid& grid, const SolverOptions& opt = {}) {
  const std::size_t dim = x0.size();
  if (orders.size() != dim)
    throw precondition_error("integrate_caputo: orders and x0 differ in length");
  if (opt.corrector_iterations < 1)
    throw precondition_error("integrate_caputo: corrector_iterations must be >= 1");
  const std::size_t count = grid.size();
  const double h = grid.step();

  std::map<double, PowerKernelWeights> by_order;
  for (double a : orders)
    if (!by_order.contains(a))
      by_order.emplace(a, PowerKernelWeights(a, h, count - 1));
  std::vector<const PowerKernelWeights*> weights(dim);
  for (std::size_t c = 0; c < dim; ++c)
    weights[c] = &by_order.at(orders[c]);

  auto check = [&](const State& x, std::size_t j) {
    for (double v : x)
      if (!std::isfinite(v) || std::abs(v) > opt.divergence_bound)
        throw divergence_error("solver diverged at t = " + std::to_string(grid.at(j)));
  };

  std::vector<State> states(count, State(dim));
  std::vector<std::vector<double>> history(dim, std::vector<double>(count));
  states[0] = x0;
  {
    const State f0 = rhs(grid.at(0), x0);
    check(f0, 0);
    for (std::size_t c = 0; c < dim; ++c)
      history[c][0] = f0[c];
  }

  State pred(dim), corr(dim), lag(dim);
  for (std::size_t j = 1; j < count; ++j) {
    const double t = grid.at(j);
    for (std::size_t c = 0; c < dim; ++c) {
      pred[c] = x0[c] + weights[c]->integrate_rectangle(history[c], j);
      lag[c] = x0[c] + weights[c]->trapezoid_history(history[c], j);
    }
    State f = rhs(t, pred);
    for (int it = 0; it < opt.corrector_iterations; ++it) {
      for (std::size_t c = 0; c < dim; ++c)
        corr[c] = lag[c] + weights[c]->trapezoid_endpoint_weight() * f[c];
      f = rhs(t, corr);
    }
    check(corr, j);
    states[j] = corr;
    for (std::size_t c = 0; c < dim; ++c)
      history[c][j] = f[c];
  }
  return states;
}

/// Solves a registered system from t = 0 over the given grid.
inline Trajectory solve_caputo(const SystemSpec& spec, const TimeGrid& grid, const SolverOptions& opt = {}) {
  spec.validate();
  if (grid.t0() != 0.0)
    throw precondition_error("solve_caputo: grid must start at t = 0");
  const Rhs rhs = rhs_registry(spec);
  return Trajectory{grid, integrate_caputo(rhs, spec.orders, spec.x0, grid, opt), spec};
}

using ExactSolution = std::function<State(double)>;

struct ConvergenceRow {
  std::size_t steps = 0;
  double h = 0.0;
  double max_error = 0.0;
  /// log(e_prev / e) / log(h_prev / h); empty for the first row or zero errors.
  std::optional<double> observed_order;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  /// True when errors are measured against a 4x-finer numerical solution.
  bool self_referenced = false;
};

/// Max-norm errors over the coarse grid for each step count on [0, t_end].
///
/// Without an exact solution the reference is the solve with 4 * max(steps)
/// steps; every step count must divide that.
inline ConvergenceTable convergence_study(const SystemSpec& spec, double t_end, std::vector<std::size_t> steps,
                                          const std::optional<ExactSolution>& exact = std::nullopt,
                                          const SolverOptions& opt = {}) {
  if (steps.empty())
    throw precondition_error("convergence_study: no step counts");
  if (!(t_end > 0.0))
    throw domain_error("convergence_study: t_end must be > 0");
  std::sort(steps.begin(), steps.end());
  ConvergenceTable table;
  table.self_referenced = !exact.has_value();

  std::optional<Trajectory> reference;
  std::size_t ref_steps = 0;
  if (!exact) {
    ref_steps = 4 * steps.back();
    for (std::size_t s : steps)
      if (s == 0 || ref_steps % s != 0)
        throw precondition_error("convergence_study: step counts must divide the reference count");
    reference = solve_caputo(spec, TimeGrid(0.0, t_end / static_cast<double>(ref_steps), ref_steps + 1), opt);
  }

  for (std::size_t s : steps) {
    const TimeGrid grid(0.0, t_end / static_cast<double>(s), s + 1);
    const Trajectory traj = solve_caputo(spec, grid, opt);
    double err = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const State want = exact ? (*exact)(grid.at(j)) : reference->states[j * (ref_steps / s)];
      for (std::size_t c = 0; c < want.size(); ++c)
        err = std::max(err, std::abs(traj.states[j][c] - want[c]));
    }
    ConvergenceRow row{s, grid.step(), err, std::nullopt};
    if (!table.rows.empty()) {
      const ConvergenceRow& prev = table.rows.back();
      if (prev.max_error > 0.0 && err > 0.0)
        row.observed_order = std::log(prev.max_error / err) / std::log(prev.h / row.h);
    }
    table.rows.push_back(row);
  }
  return table;
}

} // namespace fracper
