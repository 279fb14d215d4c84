#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <string>
#include <vector>

#include "fracper/errors.hpp"

namespace fracper {

/// Uniform grid t_j = t0 + j*h, j = 0..count-1.
class TimeGrid {
public:
  TimeGrid(double t0, double h, std::size_t count) : t0_(t0), h_(h), count_(count) {
    if (!(t0 >= 0.0) || !std::isfinite(t0))
      throw domain_error("TimeGrid: t0 must be finite and >= 0");
    if (!(h > 0.0) || !std::isfinite(h))
      throw domain_error("TimeGrid: step must be finite and > 0");
    if (count == 0)
      throw domain_error("TimeGrid: count must be positive");
  }

  /// Grid on [t0, t_end] with step h; t_end - t0 must be a whole number of steps.
  static TimeGrid spanning(double t0, double t_end, double h) {
    const double steps = (t_end - t0) / h;
    const double rounded = std::round(steps);
    if (!(steps >= 0.0) || std::abs(steps - rounded) > 1e-9 * std::max(1.0, steps))
      throw precondition_error("TimeGrid: interval length is not a multiple of the step");
    return TimeGrid(t0, h, static_cast<std::size_t>(rounded) + 1);
  }

  [[nodiscard]] double t0() const noexcept { return t0_; }
  [[nodiscard]] double step() const noexcept { return h_; }
  [[nodiscard]] std::size_t size() const noexcept { return count_; }
  [[nodiscard]] double at(std::size_t j) const noexcept { return t0_ + static_cast<double>(j) * h_; }
  [[nodiscard]] double back() const noexcept { return at(count_ - 1); }

  /// Index of the grid point closest to t (clamped to the grid).
  [[nodiscard]] std::size_t index_of(double t) const noexcept {
    const double r = std::round((t - t0_) / h_);
    if (r <= 0.0)
      return 0;
    return std::min(count_ - 1, static_cast<std::size_t>(r));
  }

  [[nodiscard]] std::vector<double> points() const {
    std::vector<double> out(count_);
    for (std::size_t j = 0; j < count_; ++j)
      out[j] = at(j);
    return out;
  }

private:
  double t0_;
  double h_;
  std::size_t count_;
};

/// Derivative order alpha with n = floor(alpha) + 1.
///
/// Integer orders are rejected unless built through comparison(), which is
/// reserved for integer-vs-fractional contrast computations.
class FractionalOrder {
public:
  explicit FractionalOrder(double alpha) : FractionalOrder(alpha, false) {}

  static FractionalOrder comparison(double alpha) { return FractionalOrder(alpha, true); }

  [[nodiscard]] double value() const noexcept { return alpha_; }
  [[nodiscard]] int n() const noexcept { return static_cast<int>(std::floor(alpha_)) + 1; }
  [[nodiscard]] bool is_integer() const noexcept { return alpha_ == std::floor(alpha_); }

private:
  FractionalOrder(double alpha, bool allow_integer) : alpha_(alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw domain_error("FractionalOrder: alpha must be finite and > 0");
    if (!allow_integer && alpha == std::floor(alpha))
      throw domain_error("FractionalOrder: integer order " + std::to_string(alpha) +
                         " requires FractionalOrder::comparison");
  }

  double alpha_;
};

/// Samples of g on a grid, with optional analytic derivative samples:
/// derivatives[k-1] holds g^(k) on the same grid.
struct SampledFunction {
  TimeGrid grid;
  std::vector<double> values;
  std::vector<std::vector<double>> derivatives{};

  SampledFunction(TimeGrid g, std::vector<double> v, std::vector<std::vector<double>> d = {})
      : grid(g), values(std::move(v)), derivatives(std::move(d)) {
    if (values.size() != grid.size())
      throw precondition_error("SampledFunction: values length does not match grid");
    for (const auto& dv : derivatives)
      if (dv.size() != grid.size())
        throw precondition_error("SampledFunction: derivative length does not match grid");
  }

  /// Samples f (and, optionally, analytic derivatives) on a grid.
  template <class F>
  static SampledFunction sample(const TimeGrid& grid, F&& f) {
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
      v[j] = f(grid.at(j));
    return SampledFunction(grid, std::move(v));
  }

  template <class F, class... Ds>
  static SampledFunction sample_with_derivatives(const TimeGrid& grid, F&& f, Ds&&... ds) {
    SampledFunction out = sample(grid, std::forward<F>(f));
    (out.derivatives.push_back(sample(grid, std::forward<Ds>(ds)).values), ...);
    return out;
  }

  [[nodiscard]] bool has_derivative(int k) const noexcept {
    return k >= 1 && static_cast<std::size_t>(k) <= derivatives.size();
  }
};

} // namespace fracper
