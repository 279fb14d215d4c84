#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "fracper/errors.hpp"

namespace fracper {

using cplx = std::complex<double>;

namespace detail {

// Lanczos coefficients, g = 7, n = 9.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

} // namespace detail

/// Gamma function on the complex plane (Lanczos, reflection for Re z < 1/2).
///
/// Throws pole_error at z = 0, -1, -2, ...
inline std::complex<double> gamma(std::complex<double> z) {
  using cd = std::complex<double>;
  constexpr double pi = std::numbers::pi;
  if (z.imag() == 0.0 && detail::is_nonpositive_integer(z.real()))
    throw pole_error("gamma: pole at non-positive integer " + std::to_string(z.real()));

  if (z.real() < 0.5) {
    // sin(pi z) computed with the integer part removed to keep the phase exact near poles.
    const double shift = std::round(z.real());
    const cd frac(z.real() - shift, z.imag());
    cd s = std::sin(pi * frac);
    if (static_cast<long long>(shift) % 2 != 0)
      s = -s;
    return pi / (s * gamma(1.0 - z));
  }

  const cd zm = z - 1.0;
  cd acc(detail::kLanczosCoeffs[0], 0.0);
  for (std::size_t i = 1; i < detail::kLanczosCoeffs.size(); ++i)
    acc += detail::kLanczosCoeffs[i] / (zm + static_cast<double>(i));
  const cd t = zm + detail::kLanczosG + 0.5;
  const double half_log_two_pi = 0.5 * std::log(2.0 * pi);
  return std::exp(half_log_two_pi + (zm + 0.5) * std::log(t) - t) * acc;
}

/// Real Gamma; std::tgamma with a pole check.
inline double gamma(double x) {
  if (detail::is_nonpositive_integer(x))
    throw pole_error("gamma: pole at non-positive integer " + std::to_string(x));
  return std::tgamma(x);
}

/// 1/Gamma(x), zero at the poles.
inline double rgamma(double x) noexcept {
  if (detail::is_nonpositive_integer(x))
    return 0.0;
  return 1.0 / std::tgamma(x);
}

} // namespace fracper
