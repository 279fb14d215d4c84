#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "fracper/errors.hpp"
#include "fracper/gamma.hpp"
#include "fracper/grid.hpp"

namespace fracper {

/// Open interval lo < Re(z) < hi.
struct StripBounds {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  [[nodiscard]] bool contains(double re) const noexcept { return re > lo && re < hi; }
};

/// Rectangle re_min <= Re(z) <= re_max, |Im(z)| <= im_max, sampled on a
/// re_samples x im_samples lattice.
struct StripWindow {
  double re_min = 0.0;
  double re_max = 1.0;
  std::size_t re_samples = 5;
  double im_max = 0.0;
  std::size_t im_samples = 5;

  void validate() const {
    if (!(re_min < re_max))
      throw domain_error("StripWindow: re_min must be < re_max");
    if (re_samples < 1 || im_samples < 1)
      throw domain_error("StripWindow: sample counts must be >= 1");
    if (!(im_max >= 0.0))
      throw domain_error("StripWindow: im_max must be >= 0");
  }

  [[nodiscard]] std::vector<cplx> points() const {
    validate();
    auto lin = [](double a, double b, std::size_t n, std::size_t i) {
      return n == 1 ? 0.5 * (a + b) : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    std::vector<cplx> out;
    for (std::size_t i = 0; i < re_samples; ++i)
      for (std::size_t k = 0; k < im_samples; ++k)
        out.emplace_back(lin(re_min, re_max, re_samples, i), lin(-im_max, im_max, im_samples, k));
    return out;
  }
};

/// Where a transformable function lives: its convergence strip and support
/// (0, support_end]. Panels wider than max_panel_width are split, which keeps
/// oscillatory compactly supported integrands resolved.
struct MellinDomain {
  StripBounds strip;
  double support_end = std::numeric_limits<double>::infinity();
  double max_panel_width = std::numeric_limits<double>::infinity();
};

namespace detail {

// e^w - 1 for complex w without cancellation at small |w|.
inline cplx expm1(cplx w) {
  const double s = std::sin(0.5 * w.imag());
  return {std::expm1(w.real()) * std::cos(w.imag()) - 2.0 * s * s, std::exp(w.real()) * std::sin(w.imag())};
}

inline void require_strip(const StripBounds& s, cplx z, const char* who) {
  if (!s.contains(z.real()))
    throw strip_error(std::string(who) + ": Re(z) = " + std::to_string(z.real()) + " outside the strip (" +
                      std::to_string(s.lo) + ", " + std::to_string(s.hi) + ")");
}

// int_a^b f(t) t^{z-1} dt with t = e^u, 30-point Gauss-Legendre in u.
template <class F>
cplx mellin_panel(const F& f, cplx z, double a, double b) {
  using boost::math::quadrature::gauss;
  return gauss<double, 30>::integrate(
      [&](double u) {
        const double t = std::exp(u);
        const double v = f(t);
        return v == 0.0 ? cplx(0.0, 0.0) : v * std::exp(z * u);
      },
      std::log(a), std::log(b));
}

} // namespace detail

/// int_0^inf f(t) t^{z-1} dt for a callable f.
///
/// The integral is split into geometric panels (ratio <= 2) and each panel is
/// integrated in log t, which absorbs the t^{z-1} singularity at 0. Panels
/// are added toward 0 until the remaining piece, bounded by
/// |f(a)| a^{Re z} / Re z, is negligible (or f is flat enough near 0 for an
/// endpoint correction), and toward infinity until four
/// consecutive panels are negligible or the support ends.
inline cplx mellin_numeric(const std::function<double(double)>& f, cplx z, const MellinDomain& domain) {
  detail::require_strip(domain.strip, z, "mellin_numeric");
  constexpr double rel = 1e-15;
  constexpr double t_floor = 1e-300, t_ceiling = 1e300;
  const double re = z.real();
  const double pivot = std::min(1.0, domain.support_end);
  const double width = domain.max_panel_width;
  cplx sum(0.0, 0.0);

  // Upward from the pivot.
  int quiet = 0;
  for (double a = pivot; a < domain.support_end;) {
    if (a > t_ceiling)
      throw convergence_error("mellin_numeric: tail not negligible before t = 1e300");
    const double b = std::min({2.0 * a, a + width, domain.support_end});
    const cplx piece = detail::mellin_panel(f, z, a, b);
    sum += piece;
    quiet = std::abs(piece) <= rel * std::abs(sum) ? quiet + 1 : 0;
    if (std::isinf(domain.support_end) && quiet >= 4)
      break;
    a = b;
  }

  // Downward from the pivot.
  quiet = 0;
  for (double b = pivot;;) {
    if (b < t_floor)
      throw convergence_error("mellin_numeric: contribution near t = 0 not negligible");
    const double a = std::max(0.5 * b, b - width);
    const cplx piece = detail::mellin_panel(f, z, a, b);
    sum += piece;
    quiet = std::abs(piece) <= rel * std::abs(sum) ? quiet + 1 : 0;
    const double scale = std::max(std::abs(sum), std::numeric_limits<double>::min());
    if (re > 0.0) {
      const double fa = f(a);
      const double rest = std::abs(fa) * std::exp(re * std::log(a)) / re;
      if (rest <= rel * scale)
        break;
      // Near 0 with small Re z the bound above decays too slowly. If f is flat
      // there, take f(a) a^z / z for [0, a]; the rest is within L a^{Re z + 1} / (Re z + 1)
      // for a Lipschitz constant L estimated from f(a / 2).
      const double lip = 2.0 * std::abs(fa - f(0.5 * a)) / a;
      if (lip * std::exp((re + 1.0) * std::log(a)) / (re + 1.0) <= rel * scale) {
        sum += fa * std::exp(z * std::log(a)) / z;
        break;
      }
    }
    if (quiet >= 4)
      break;
    b = a;
  }
  return sum;
}

/// Mellin transform of samples on [t0, t_N], zero elsewhere: the piecewise
/// linear interpolant is integrated exactly against t^{z-1}.
inline cplx mellin_numeric(const SampledFunction& f, cplx z, const StripBounds& strip = {}) {
  detail::require_strip(strip, z, "mellin_numeric");
  const TimeGrid& g = f.grid;
  if (g.t0() == 0.0 && !(z.real() > 0.0))
    throw strip_error("mellin_numeric: samples at t = 0 need Re(z) > 0");
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const double a = g.at(i), b = g.at(i + 1);
    const double fa = f.values[i], fb = f.values[i + 1];
    if (fa == 0.0 && fb == 0.0)
      continue;
    // f = fa + s (t - a), s = (fb - fa)/(b - a); int t^{z-1} and int (t - a) t^{z-1}.
    cplx m0, m1;
    if (a == 0.0) {
      m0 = std::exp(z * std::log(b)) / z;
      m1 = std::exp((z + 1.0) * std::log(b)) / (z + 1.0);
    } else {
      const double la = std::log(a), lr = std::log1p((b - a) / a);
      const cplx az = std::exp(z * la);
      m0 = az * detail::expm1(z * lr) / z;
      // int_a^b (t - a) t^{z-1} dt = (b^{z+1} - a^{z+1})/(z+1) - a m0
      const cplx p1 = a * az * detail::expm1((z + 1.0) * lr) / (z + 1.0);
      m1 = p1 - a * m0;
    }
    sum += fa * m0 + (fb - fa) / (b - a) * m1;
  }
  return sum;
}

namespace detail {

inline double kernel_exponent(double alpha) {
  if (!(alpha > 0.0) || alpha == std::floor(alpha) || !std::isfinite(alpha))
    throw domain_error("kernel: alpha must be a positive non-integer");
  return alpha - std::floor(alpha); // alpha - n + 1
}

} // namespace detail

/// Mellin transform of (1 + t)^{n-alpha-1}, n = floor(alpha) + 1:
/// Gamma(w - z) Gamma(z) / Gamma(w) with w = alpha - n + 1, for 0 < Re z < w.
inline cplx g_kernel_mellin_closed(double alpha, cplx z) {
  const double w = detail::kernel_exponent(alpha);
  detail::require_strip(StripBounds{0.0, w}, z, "g_kernel_mellin_closed");
  return gamma(cplx(w, 0.0) - z) * gamma(z) / gamma(w);
}

/// Analytic bound on int_{t_max}^inf |(1 + t)^{-w} t^{z-1}| dt.
inline double kernel_tail_bound(double alpha, cplx z, double t_max) {
  const double w = detail::kernel_exponent(alpha);
  return std::exp((z.real() - w) * std::log(t_max)) / (w - z.real());
}

/// Smallest t_max with kernel_tail_bound below tail_tol.
inline double kernel_truncation_point(double alpha, cplx z, double tail_tol = 1e-8) {
  const double w = detail::kernel_exponent(alpha);
  detail::require_strip(StripBounds{0.0, w}, z, "kernel_truncation_point");
  const double gap = w - z.real();
  const double log_t = std::log(1.0 / (tail_tol * gap)) / gap;
  if (log_t > std::log(1e300))
    throw convergence_error("kernel_truncation_point: required t_max exceeds 1e300");
  return std::max(1.0, std::exp(log_t));
}

/// Quadrature of the kernel transform truncated at t_max (default: the point
/// where the analytic tail bound drops below tail_tol).
inline cplx kernel_mellin_numeric(double alpha, cplx z, double t_max = 0.0, double tail_tol = 1e-8) {
  const double w = detail::kernel_exponent(alpha);
  detail::require_strip(StripBounds{0.0, w}, z, "kernel_mellin_numeric");
  if (t_max <= 0.0)
    t_max = kernel_truncation_point(alpha, z, tail_tol);
  return mellin_numeric([w](double t) { return std::exp(-w * std::log1p(t)); }, z,
                        MellinDomain{StripBounds{0.0, w}, t_max});
}

/// T-periodic trigonometric polynomial
/// c0 + sum_k (a_k cos(k omega t) + b_k sin(k omega t)), omega = 2 pi / T,
/// with exact derivatives.
struct TrigPolynomial {
  double period = 2.0 * std::numbers::pi;
  double offset = 0.0;
  std::vector<double> cos_coeffs; // a_1, a_2, ...
  std::vector<double> sin_coeffs; // b_1, b_2, ...

  [[nodiscard]] double omega() const noexcept { return 2.0 * std::numbers::pi / period; }

  /// k-th derivative at t (k = 0 is the value).
  [[nodiscard]] double derivative(double t, int k) const {
    if (k < 0)
      throw domain_error("TrigPolynomial: negative derivative order");
    double acc = k == 0 ? offset : 0.0;
    const std::size_t terms = std::max(cos_coeffs.size(), sin_coeffs.size());
    for (std::size_t j = 1; j <= terms; ++j) {
      const double a = j <= cos_coeffs.size() ? cos_coeffs[j - 1] : 0.0;
      const double b = j <= sin_coeffs.size() ? sin_coeffs[j - 1] : 0.0;
      const double f = static_cast<double>(j) * omega();
      // d^k/dt^k of cos(f t) is f^k cos(f t + k pi/2), likewise for sin.
      const double phase = f * t + k * std::numbers::pi / 2.0;
      acc += std::pow(f, k) * (a * std::cos(phase) + b * std::sin(phase));
    }
    return acc;
  }

  [[nodiscard]] double operator()(double t) const { return derivative(t, 0); }

  [[nodiscard]] bool is_constant() const noexcept {
    return std::all_of(cos_coeffs.begin(), cos_coeffs.end(), [](double c) { return c == 0.0; }) &&
           std::all_of(sin_coeffs.begin(), sin_coeffs.end(), [](double c) { return c == 0.0; });
  }
};

/// h(u) = x^{(n)}(T - u) on [0, T], zero beyond. Samples must start at 0 and
/// reach T, which must be a whole number of steps.
inline SampledFunction h_function(const SampledFunction& xn, double period) {
  const TimeGrid& g = xn.grid;
  if (g.t0() != 0.0)
    throw coverage_error("h_function: samples must start at t = 0");
  const double steps = period / g.step();
  const double m = std::round(steps);
  if (std::abs(steps - m) > 1e-9 * std::max(1.0, steps))
    throw precondition_error("h_function: T must be a whole number of steps");
  const auto last = static_cast<std::size_t>(m);
  if (last >= g.size())
    throw coverage_error("h_function: samples do not reach T");
  std::vector<double> out(last + 1);
  for (std::size_t i = 0; i <= last; ++i)
    out[i] = xn.values[last - i];
  return SampledFunction(TimeGrid(0.0, g.step(), last + 1), std::move(out));
}

inline std::function<double(double)> h_function(std::function<double(double)> xn, double period) {
  return [xn = std::move(xn), period](double u) { return (u < 0.0 || u > period) ? 0.0 : xn(period - u); };
}

/// H(z) = int_0^T x^{(n)}(T - t) t^{z-1} dt for a trigonometric polynomial.
inline cplx h_transform(const TrigPolynomial& x, int n, cplx z) {
  const double T = x.period;
  auto h = h_function([&x, n](double t) { return x.derivative(t, n); }, T);
  return mellin_numeric(h, z, MellinDomain{StripBounds{0.0, std::numeric_limits<double>::infinity()}, T, T / 8.0});
}

/// A callable together with its Mellin domain.
struct MellinFunction {
  std::function<double(double)> f;
  MellinDomain domain;
};

/// (g * h)(t) = int_0^inf g(t s) h(s) ds by geometric-panel quadrature in s.
/// h must have finite support; panels reach down to 1e-16 min(S, 1/t).
inline double mellin_convolution(const MellinFunction& g, const MellinFunction& h, double t) {
  const double S = h.domain.support_end;
  if (!std::isfinite(S))
    throw precondition_error("mellin_convolution: h must have finite support");
  using boost::math::quadrature::gauss;
  const double cutoff = 1e-16 * std::min(S, t > 0.0 ? 1.0 / t : S);
  auto integrand = [&](double s) { return g.f(t * s) * h.f(s); };
  double sum = 0.0;
  for (double b = S; b > cutoff;) {
    const double a = std::max({0.5 * b, b - h.domain.max_panel_width, cutoff});
    sum += gauss<double, 30>::integrate(integrand, a, b);
    b = a;
  }
  return sum;
}

/// |M(g * h)(z) - M(g)(z) M(h)(1 - z)|; z must lie in S_g and 1 - z in S_h.
inline double convolution_identity_residual(const MellinFunction& g, const MellinFunction& h, cplx z) {
  detail::require_strip(g.domain.strip, z, "convolution_identity_residual (g)");
  detail::require_strip(h.domain.strip, 1.0 - z, "convolution_identity_residual (h)");
  const cplx mg = mellin_numeric(g.f, z, g.domain);
  const cplx mh = mellin_numeric(h.f, 1.0 - z, h.domain);
  const MellinDomain conv{StripBounds{std::max(g.domain.strip.lo, 1.0 - h.domain.strip.hi),
                                      std::min(g.domain.strip.hi, 1.0 - h.domain.strip.lo)}};
  const cplx mc = mellin_numeric([&](double t) { return mellin_convolution(g, h, t); }, z, conv);
  return std::abs(mc - mg * mh);
}

struct WitnessReport {
  double alpha = 0.0;
  int n = 0;
  StripWindow strip;
  std::vector<cplx> z;
  std::vector<double> abs_h;          // |H(z)|
  std::vector<double> abs_g_reflected; // |G(1 - z)|
  double min_abs_h = 0.0, max_abs_h = 0.0;
  double min_abs_g = 0.0, max_abs_g = 0.0;
};

/// Samples |H(z)| and |G(1 - z)| over a window inside n - alpha < Re z < 1.
/// H vanishing on the whole window forces x^{(n)} = 0, i.e. x constant.
inline WitnessReport proof_witness(const TrigPolynomial& x, double alpha, const StripWindow& strip) {
  strip.validate();
  const double w = detail::kernel_exponent(alpha);
  const int n = static_cast<int>(std::floor(alpha)) + 1;
  if (!(strip.re_min > 1.0 - w && strip.re_max < 1.0))
    throw strip_error("proof_witness: window must lie inside n - alpha < Re z < 1");
  WitnessReport rep{alpha, n, strip, strip.points(), {}, {}};
  for (cplx z : rep.z) {
    rep.abs_h.push_back(std::abs(h_transform(x, n, z)));
    rep.abs_g_reflected.push_back(std::abs(g_kernel_mellin_closed(alpha, 1.0 - z)));
  }
  auto [hmin, hmax] = std::minmax_element(rep.abs_h.begin(), rep.abs_h.end());
  auto [gmin, gmax] = std::minmax_element(rep.abs_g_reflected.begin(), rep.abs_g_reflected.end());
  rep.min_abs_h = *hmin;
  rep.max_abs_h = *hmax;
  rep.min_abs_g = *gmin;
  rep.max_abs_g = *gmax;
  return rep;
}

} // namespace fracper
