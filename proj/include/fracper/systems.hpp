#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "fracper/errors.hpp"

namespace fracper {

using State = std::vector<double>;

/// Right-hand side f(t, x) of D^alpha x = f(t, x).
using Rhs = std::function<State(double, const State&)>;

/// A named built-in system with its parameters, per-component orders and
/// initial state.
struct SystemSpec {
  std::string name;
  std::vector<double> params;
  std::vector<double> orders;
  State x0;

  [[nodiscard]] std::size_t dimension() const noexcept { return x0.size(); }

  void validate() const {
    if (x0.empty())
      throw precondition_error("SystemSpec: empty initial state");
    if (orders.size() != x0.size())
      throw precondition_error("SystemSpec: orders and x0 must have the same length");
    for (double a : orders)
      if (!(a > 0.0 && a < 1.0))
        throw domain_error("SystemSpec: every order must lie in (0, 1)");
    for (double v : x0)
      if (!std::isfinite(v))
        throw domain_error("SystemSpec: non-finite initial state");
  }
};

/// Names accepted by rhs_registry.
inline const std::vector<std::string>& registered_systems() {
  static const std::vector<std::string> names = {"nn2", "linear", "forced_periodic", "constant"};
  return names;
}

/// Built-in right-hand sides.
///
///   nn2             f_i = -x_i + sum_j W_ij tanh(x_j), W = [[2, -0.5], [1, 2]] unless
///                   four params give W row-major. Dimension 2.
///   linear          f = A x + b; params = A (row-major, d*d) followed by optional b (d).
///   forced_periodic f_i = A cos(2 pi t / T) - lambda x_i; params = [A, T, lambda],
///                   defaults [1, 1, 0]. T-periodic in t.
///   constant        f = c; params = c (d values), one value broadcast, or empty for 0.
inline Rhs rhs_registry(const std::string& name, const std::vector<double>& params, std::size_t dimension) {
  if (name == "nn2") {
    if (dimension != 2)
      throw precondition_error("nn2: dimension must be 2");
    std::vector<double> w = {2.0, -0.5, 1.0, 2.0};
    if (params.size() == 4)
      w = params;
    else if (!params.empty())
      throw precondition_error("nn2: expects 0 or 4 params");
    return [w](double, const State& x) {
      const double a = std::tanh(x[0]), b = std::tanh(x[1]);
      return State{-x[0] + w[0] * a + w[1] * b, -x[1] + w[2] * a + w[3] * b};
    };
  }
  if (name == "linear") {
    const std::size_t d = dimension;
    if (params.size() != d * d && params.size() != d * d + d)
      throw precondition_error("linear: expects d*d or d*d + d params");
    std::vector<double> a(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(d * d));
    std::vector<double> b(d, 0.0);
    if (params.size() == d * d + d)
      b.assign(params.begin() + static_cast<std::ptrdiff_t>(d * d), params.end());
    return [a, b, d](double, const State& x) {
      State out(b);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          out[i] += a[i * d + j] * x[j];
      return out;
    };
  }
  if (name == "forced_periodic") {
    double amp = 1.0, period = 1.0, damping = 0.0;
    if (params.size() > 3)
      throw precondition_error("forced_periodic: expects at most 3 params");
    if (!params.empty())
      amp = params[0];
    if (params.size() > 1)
      period = params[1];
    if (params.size() > 2)
      damping = params[2];
    if (!(period > 0.0))
      throw domain_error("forced_periodic: period must be > 0");
    const double omega = 2.0 * std::numbers::pi / period;
    return [amp, omega, damping](double t, const State& x) {
      State out(x.size());
      const double forcing = amp * std::cos(omega * t);
      for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = forcing - damping * x[i];
      return out;
    };
  }
  if (name == "constant") {
    State c(dimension, 0.0);
    if (params.size() == 1)
      c.assign(dimension, params[0]);
    else if (params.size() == dimension)
      c = params;
    else if (!params.empty())
      throw precondition_error("constant: expects 0, 1 or d params");
    return [c](double, const State&) { return c; };
  }
  throw unknown_system_error("unknown system '" + name + "'");
}

inline Rhs rhs_registry(const SystemSpec& spec) { return rhs_registry(spec.name, spec.params, spec.dimension()); }

} // namespace fracper
