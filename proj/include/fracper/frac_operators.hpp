#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "fracper/errors.hpp"
#include "fracper/gamma.hpp"
#include "fracper/grid.hpp"
#include "fracper/product_integration.hpp"

namespace fracper {

/// Signed binomial weights w_r = (-1)^r binom(alpha, r), r = 0..count-1.
inline std::vector<double> gl_weights(double alpha, std::size_t count) {
  std::vector<double> w(count);
  if (count == 0)
    return w;
  w[0] = 1.0;
  for (std::size_t r = 1; r < count; ++r)
    w[r] = w[r - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(r));
  return w;
}

/// Second-order finite-difference derivative (central inside, one-sided
/// second-order stencils at both ends), applied k times.
inline std::vector<double> finite_difference_derivative(std::vector<double> v, double h, int k) {
  if (k < 0)
    throw domain_error("finite_difference_derivative: negative order");
  if (k > 0 && v.size() < 3)
    throw insufficient_samples_error("finite_difference_derivative: need at least 3 samples");
  const std::size_t n = v.size();
  std::vector<double> d(n);
  for (int pass = 0; pass < k; ++pass) {
    // One-sided stencils written in differences so constants map to exact zeros.
    d[0] = (3.0 * (v[1] - v[0]) - (v[2] - v[1])) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i)
      d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * (v[n - 1] - v[n - 2]) - (v[n - 2] - v[n - 3])) / (2.0 * h);
    v.swap(d);
  }
  return v;
}

/// How the Grunwald-Letnikov sum is evaluated at finite step h.
enum class GlScheme {
  /// h^{-alpha} sum_r w_r f(t - r h), the defining sum.
  plain,
  /// Defining sum plus starting weights on f(t_0), f(t_1), f(t_2) chosen so the
  /// sum is exact for 1, t and t^2. Removes the O(h t^{-alpha-1}) error the
  /// plain sum carries near the lower terminal when f(0) or f'(0) is nonzero.
  starting_corrected,
};

namespace detail {

inline void require_zero_terminal(const SampledFunction& f, const char* who) {
  if (f.grid.t0() != 0.0)
    throw precondition_error(std::string(who) + ": lower terminal must be t0 = 0");
}

// g^{(k)} samples: analytic if supplied, second-order finite differences otherwise.
inline std::vector<double> derivative_samples(const SampledFunction& f, int k) {
  if (k == 0)
    return f.values;
  if (f.has_derivative(k))
    return f.derivatives[static_cast<std::size_t>(k - 1)];
  if (f.grid.size() < static_cast<std::size_t>(k) + 2)
    throw insufficient_samples_error("derivative of order " + std::to_string(k) + " needs at least " +
                                     std::to_string(k + 2) + " samples");
  return finite_difference_derivative(f.values, f.grid.step(), k);
}

} // namespace detail

/// Grunwald-Letnikov derivative at step h on the sampling grid (terminal a = 0).
inline SampledFunction gl_derivative(const SampledFunction& f, FractionalOrder order,
                                     GlScheme scheme = GlScheme::plain) {
  detail::require_zero_terminal(f, "gl_derivative");
  const double alpha = order.value();
  const double h = f.grid.step();
  const std::size_t n = f.grid.size();
  const std::vector<double> w = gl_weights(alpha, n);
  const double scale = std::pow(h, -alpha);

  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t r = 0; r <= j; ++r)
      acc += w[r] * f.values[j - r];
    out[j] = scale * acc;
  }

  if (scheme == GlScheme::starting_corrected && n > 1) {
    const std::size_t s = std::min<std::size_t>(3, n);
    // Inverse of the Vandermonde matrix V[nu][k] = k^nu on nodes 0..s-1.
    std::array<std::array<double, 3>, 3> inv{};
    if (s == 2)
      inv = {{{1.0, -1.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 0.0}}};
    else if (s == 3)
      inv = {{{1.0, -1.5, 0.5}, {0.0, 2.0, -1.0}, {0.0, -0.5, 0.5}}};
    else
      inv = {{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}};

    for (std::size_t j = 1; j < n; ++j) {
      const double jd = static_cast<double>(j);
      std::array<double, 3> defect{};
      for (std::size_t nu = 0; nu < s; ++nu) {
        double discrete = 0.0;
        for (std::size_t r = 0; r <= j; ++r) {
          const double base = static_cast<double>(j - r);
          discrete += w[r] * (nu == 0 ? 1.0 : nu == 1 ? base : base * base);
        }
        const double exact =
            std::tgamma(static_cast<double>(nu) + 1.0) * rgamma(static_cast<double>(nu) + 1.0 - alpha) *
            std::pow(jd, static_cast<double>(nu) - alpha);
        defect[nu] = exact - discrete;
      }
      double corr = 0.0;
      for (std::size_t k = 0; k < s; ++k) {
        double sk = 0.0;
        for (std::size_t nu = 0; nu < s; ++nu)
          sk += inv[k][nu] * defect[nu];
        corr += sk * f.values[k];
      }
      out[j] += scale * corr;
    }
  }
  return SampledFunction(f.grid, std::move(out));
}

/// Caputo derivative by product-trapezoid integration of g^{(n)} against the
/// kernel (t - s)^{n-alpha-1}/Gamma(n-alpha). O(h^2) for smooth g^{(n)}.
///
/// Integer orders (comparison path) return g^{(alpha)} itself.
inline SampledFunction caputo_derivative(const SampledFunction& f, FractionalOrder order) {
  detail::require_zero_terminal(f, "caputo_derivative");
  if (order.is_integer())
    return SampledFunction(f.grid, detail::derivative_samples(f, static_cast<int>(order.value())));

  const int n = order.n();
  const std::vector<double> gn = detail::derivative_samples(f, n);
  const std::size_t count = f.grid.size();
  const PowerKernelWeights weights(static_cast<double>(n) - order.value(), f.grid.step(), count - 1);
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j)
    out[j] = weights.integrate_trapezoid(gn, j);
  return SampledFunction(f.grid, std::move(out));
}

/// Riemann-Liouville derivative with its singularity metadata.
struct RlDerivative {
  /// Values on the grid; starts at t0 + h when singular_at_origin.
  SampledFunction values;
  /// Some initial derivative g^{(k)}(0+), k < n, is nonzero, so the derivative
  /// blows up like t^{k-alpha} as t -> 0+.
  bool singular_at_origin = false;
  /// g^{(k)}(0+) for k = 0..n-1, as used in the correction sum.
  std::vector<double> initial_derivatives;
};

/// Riemann-Liouville derivative via the Caputo derivative plus the
/// initial-value correction sum_{k<n} g^{(k)}(0+) t^{k-alpha} / Gamma(k-alpha+1).
inline RlDerivative rl_derivative(const SampledFunction& f, FractionalOrder order) {
  detail::require_zero_terminal(f, "rl_derivative");
  const SampledFunction caputo = caputo_derivative(f, order);
  if (order.is_integer())
    return RlDerivative{caputo, false, {}};

  const int n = order.n();
  const double alpha = order.value();
  double scale = 0.0;
  for (double v : f.values)
    scale = std::max(scale, std::abs(v));
  const double zero_tol = 1e-12 * std::max(1.0, scale);

  std::vector<double> init(static_cast<std::size_t>(n));
  bool singular = false;
  for (int k = 0; k < n; ++k) {
    init[static_cast<std::size_t>(k)] = detail::derivative_samples(f, k)[0];
    if (std::abs(init[static_cast<std::size_t>(k)]) > zero_tol)
      singular = true;
    else
      init[static_cast<std::size_t>(k)] = 0.0;
  }

  const std::size_t first = singular ? 1 : 0;
  const std::size_t count = f.grid.size();
  if (first >= count)
    throw insufficient_samples_error("rl_derivative: singular at the origin and no other grid point");
  std::vector<double> out(count - first);
  for (std::size_t j = first; j < count; ++j) {
    const double t = f.grid.at(j);
    double corr = 0.0;
    if (t > 0.0)
      for (int k = 0; k < n; ++k)
        if (init[static_cast<std::size_t>(k)] != 0.0)
          corr += init[static_cast<std::size_t>(k)] * std::pow(t, k - alpha) * rgamma(k - alpha + 1.0);
    out[j - first] = caputo.values[j] + corr;
  }
  const TimeGrid grid(f.grid.at(first), f.grid.step(), count - first);
  return RlDerivative{SampledFunction(grid, std::move(out)), singular, std::move(init)};
}

/// max |GL - RL| over grid points with t_min <= t <= t_max.
///
/// By default the points t <= h are skipped, where the GL sum has seen only
/// one or two samples.
inline double definition_relation_residual(const SampledFunction& f, FractionalOrder order,
                                           GlScheme scheme = GlScheme::starting_corrected,
                                           std::optional<double> t_min = std::nullopt,
                                           std::optional<double> t_max = std::nullopt) {
  const SampledFunction gl = gl_derivative(f, order, scheme);
  const RlDerivative rl = rl_derivative(f, order);
  const double lo = t_min.value_or(2.0 * f.grid.step());
  const double hi = t_max.value_or(f.grid.back());
  const std::size_t offset = f.grid.size() - rl.values.grid.size();
  const double eps = 1e-9 * f.grid.step();
  double worst = 0.0;
  for (std::size_t j = offset; j < f.grid.size(); ++j) {
    const double t = f.grid.at(j);
    if (t < lo - eps || t > hi + eps)
      continue;
    worst = std::max(worst, std::abs(gl.values[j] - rl.values.values[j - offset]));
  }
  return worst;
}

} // namespace fracper
