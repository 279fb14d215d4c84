#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "fracper/errors.hpp"

namespace fracper {

namespace detail {

// d^p - (d-1)^p for integer d >= 1, without cancellation.
inline double first_difference_pow(double p, double d) {
  return -std::pow(d, p) * std::expm1(p * std::log1p(-1.0 / d));
}

// (d+1)^p - 2 d^p + (d-1)^p for integer d >= 1.
inline double second_difference_pow(double p, double d) {
  if (d < 8.0)
    return std::pow(d + 1.0, p) - 2.0 * std::pow(d, p) + std::pow(d - 1.0, p);
  // 2 d^p sum_k binom(p, 2k) d^{-2k}; converges like d^{-2k}.
  const double inv2 = 1.0 / (d * d);
  double binom = 1.0, scale = 1.0, acc = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const double m = 2.0 * k;
    binom *= (p - m + 2.0) * (p - m + 1.0) / ((m - 1.0) * m);
    scale *= inv2;
    acc += binom * scale;
  }
  return 2.0 * std::pow(d, p) * acc;
}

} // namespace detail

/// Product-integration weights for the Riemann-Liouville integral
///
///   (I^mu y)(t_j) = 1/Gamma(mu) int_0^{t_j} (t_j - s)^{mu-1} y(s) ds,   mu > 0,
///
/// on a uniform grid. The kernel is integrated exactly against the piecewise
/// linear (trapezoid) or piecewise constant (rectangle) interpolant of y, so
/// the weak singularity at s = t_j costs no accuracy.
class PowerKernelWeights {
public:
  PowerKernelWeights(double mu, double h, std::size_t max_index)
      : mu_(mu), trap_scale_(std::pow(h, mu) / std::tgamma(mu + 2.0)),
        rect_scale_(std::pow(h, mu) / std::tgamma(mu + 1.0)), second_(max_index + 1), first_(max_index + 1) {
    if (!(mu > 0.0))
      throw domain_error("PowerKernelWeights: order must be > 0");
    if (!(h > 0.0))
      throw domain_error("PowerKernelWeights: step must be > 0");
    for (std::size_t d = 1; d <= max_index; ++d) {
      second_[d] = detail::second_difference_pow(mu + 1.0, static_cast<double>(d));
      first_[d] = detail::first_difference_pow(mu, static_cast<double>(d));
    }
  }

  [[nodiscard]] double order() const noexcept { return mu_; }
  [[nodiscard]] std::size_t capacity() const noexcept { return second_.size() - 1; }

  /// Weight of y_i in the trapezoid rule for (I^mu y)(t_j), 0 <= i <= j.
  [[nodiscard]] double trapezoid(std::size_t j, std::size_t i) const noexcept {
    if (j == 0)
      return 0.0;
    if (i == j)
      return trap_scale_;
    if (i == 0) {
      const double jd = static_cast<double>(j);
      // (j-1)^{mu+1} - (j-1-mu) j^mu, rearranged to avoid cancellation.
      const double e = std::expm1(mu_ * std::log1p(-1.0 / jd));
      return trap_scale_ * std::pow(jd, mu_) * ((jd - 1.0) * e + mu_);
    }
    return trap_scale_ * second_[j - i];
  }

  /// Weight of y_i in the rectangle (left-point) rule for (I^mu y)(t_j), 0 <= i < j.
  [[nodiscard]] double rectangle(std::size_t j, std::size_t i) const noexcept {
    return rect_scale_ * first_[j - i];
  }

  /// sum_{i=0}^{j} trapezoid(j, i) y[i]; y must hold at least j + 1 values.
  [[nodiscard]] double integrate_trapezoid(std::span<const double> y, std::size_t j) const {
    check(y, j);
    if (j == 0)
      return 0.0;
    double acc = trapezoid(j, 0) * y[0];
    double inner = 0.0;
    for (std::size_t i = 1; i < j; ++i)
      inner += second_[j - i] * y[i];
    acc += trap_scale_ * inner + trap_scale_ * y[j];
    return acc;
  }

  /// Trapezoid history sum excluding the endpoint y[j] (which the caller supplies).
  [[nodiscard]] double trapezoid_history(std::span<const double> y, std::size_t j) const {
    if (j == 0)
      return 0.0;
    check(y, j - 1);
    double inner = 0.0;
    for (std::size_t i = 1; i < j; ++i)
      inner += second_[j - i] * y[i];
    return trapezoid(j, 0) * y[0] + trap_scale_ * inner;
  }

  /// sum_{i=0}^{j-1} rectangle(j, i) y[i].
  [[nodiscard]] double integrate_rectangle(std::span<const double> y, std::size_t j) const {
    if (j == 0)
      return 0.0;
    check(y, j - 1);
    double inner = 0.0;
    for (std::size_t i = 0; i < j; ++i)
      inner += first_[j - i] * y[i];
    return rect_scale_ * inner;
  }

  [[nodiscard]] double trapezoid_endpoint_weight() const noexcept { return trap_scale_; }

private:
  void check(std::span<const double> y, std::size_t j) const {
    if (j > capacity())
      throw precondition_error("PowerKernelWeights: index beyond precomputed capacity");
    if (y.size() <= j)
      throw coverage_error("PowerKernelWeights: not enough samples for the requested point");
  }

  double mu_;
  double trap_scale_;
  double rect_scale_;
  std::vector<double> second_;
  std::vector<double> first_;
};

} // namespace fracper
