#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "fracper/detail/mp_real.hpp"
#include "fracper/errors.hpp"
#include "fracper/gamma.hpp"

namespace fracper {

/// Parameters of E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;

  void validate() const {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw domain_error("MLParams: alpha must be finite and > 0");
    if (!std::isfinite(beta))
      throw domain_error("MLParams: beta must be finite");
  }
};

struct MLOptions {
  /// Double-precision Taylor summation is used for |z| <= radius * alpha.
  double switch_radius_per_alpha = 5.0;
  /// Working-precision ceiling for the multiprecision path.
  long max_precision_bits = 1L << 16;
  std::size_t max_terms = 2'000'000;
};

namespace detail {

struct MLCertificate {
  int small_run = 0;

  // Stop once three consecutive terms are negligible and the geometric tail
  // bound |t_k| rho/(1 - rho) is below the target. All quantities in log2.
  bool update(double log2_term, double log2_sum, double x, double alpha, double abs_z,
              double log2_rel) {
    const double log2_target = log2_rel + std::max(log2_sum, -40.0);
    small_run = (log2_term <= log2_target) ? small_run + 1 : 0;
    if (small_run < 3)
      return false;
    if (abs_z == 0.0)
      return true;
    if (!(x > 0.0))
      return false;
    // Gamma(x)/Gamma(x + alpha) is decreasing for x > 0, so rho bounds every later ratio.
    const double log_rho = std::log(abs_z) + std::lgamma(x) - std::lgamma(x + alpha);
    if (!(log_rho < 0.0))
      return false;
    const double rho = std::exp(log_rho);
    const double log2_tail = log2_term + std::log2(rho / (1.0 - rho));
    return log2_tail <= log2_target;
  }
};

inline double log2_abs(std::complex<double> v) noexcept {
  const double a = std::abs(v);
  return a == 0.0 ? -INFINITY : std::log2(a);
}

inline std::complex<double> ml_double(const MLParams& p, std::complex<double> z, const MLOptions& opt) {
  using cd = std::complex<double>;
  const double abs_z = std::abs(z);
  cd sum(0.0, 0.0);
  cd power(1.0, 0.0);
  MLCertificate cert;
  for (std::size_t k = 0; k < opt.max_terms; ++k) {
    const double x = p.alpha * static_cast<double>(k) + p.beta;
    const double rg = (x > 170.0) ? std::exp(-std::lgamma(x)) : rgamma(x);
    const cd term = power * rg;
    sum += term;
    if (cert.update(log2_abs(term), log2_abs(sum), x, p.alpha, abs_z, -55.0))
      return sum;
    power *= z;
  }
  throw convergence_error("mittag_leffler: series did not certify within max_terms");
}

/// Smallest m <= 16 with m * alpha an exact integer, or 0.
inline unsigned lattice_period(double alpha) {
  for (unsigned m = 1; m <= 16; ++m) {
    MpReal v(128, alpha);
    mpfr_mul_ui(v.get(), v.get(), m, MPFR_RNDN); // exact: 53 + 5 bits
    if (mpfr_integer_p(v.get()) && mpfr_cmp_ui(v.get(), 64) <= 0)
      return m;
  }
  return 0;
}

/// Working precision: enough bits to carry the largest term plus ~128 bits of headroom.
inline long ml_precision_bits(const MLParams& p, double abs_z, const MLOptions& opt) {
  if (abs_z == 0.0)
    return 64;
  const double log_abs_z = std::log(abs_z);
  double max_log = 0.0;
  std::size_t k = 0;
  for (; k < opt.max_terms; ++k) {
    const double x = p.alpha * static_cast<double>(k) + p.beta;
    if (detail::is_nonpositive_integer(x))
      continue;
    const double lt = static_cast<double>(k) * log_abs_z - std::lgamma(x);
    max_log = std::max(max_log, lt);
    if (x > 0.0 && log_abs_z + std::lgamma(x) - std::lgamma(x + p.alpha) < 0.0)
      break;
  }
  if (k == opt.max_terms)
    throw convergence_error("mittag_leffler: term magnitudes never start to decay");
  const double bits = max_log / std::numbers::ln2 + 128.0 + std::log2(static_cast<double>(k) + 2.0) * 4.0;
  if (bits > static_cast<double>(opt.max_precision_bits))
    throw convergence_error("mittag_leffler: required precision " + std::to_string(static_cast<long>(bits)) +
                            " bits exceeds the configured ceiling");
  return static_cast<long>(std::ceil(bits));
}

inline std::complex<double> ml_multiprecision(const MLParams& p, std::complex<double> z, const MLOptions& opt) {
  const long bits = ml_precision_bits(p, std::abs(z), opt);
  const bool real_axis = z.imag() == 0.0;
  const double abs_z = std::abs(z);

  MpReal zr(bits, z.real()), zi(bits, z.imag());
  MpReal pr(bits, 1.0), pi(bits, 0.0);
  MpReal sr(bits, 0.0), si(bits, 0.0);
  MpReal tr(bits), ti(bits), tmp(bits), tmp2(bits);
  MpReal a(bits, p.alpha), b(bits, p.beta), x(bits), g(bits);

  // 1/Gamma(x_k) by the lattice recurrence Gamma(x + m alpha) = Gamma(x) prod_j (x + j)
  // whenever m alpha is an exact integer; otherwise mpfr_gamma per term.
  const unsigned m = lattice_period(p.alpha);
  const long step = m ? std::lround(p.alpha * m) : 0;
  std::vector<MpReal> rg_ring(m ? m : 1, MpReal(bits));
  std::vector<MpReal> x_ring(m ? m : 1, MpReal(bits));
  std::vector<bool> positive_ring(m ? m : 1, false);
  MpReal rg(bits);

  MLCertificate cert;
  for (std::size_t k = 0; k < opt.max_terms; ++k) {
    mpfr_mul_ui(x.get(), a.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_add(x.get(), x.get(), b.get(), MPFR_RNDN);
    const double xd = x.to_double();

    const std::size_t slot = m ? k % m : 0;
    if (m && k >= m && positive_ring[slot]) {
      mpfr_set(rg.get(), rg_ring[slot].get(), MPFR_RNDN);
      for (long j = 0; j < step; ++j) {
        mpfr_add_si(tmp.get(), x_ring[slot].get(), j, MPFR_RNDN);
        mpfr_div(rg.get(), rg.get(), tmp.get(), MPFR_RNDN);
      }
    } else if (mpfr_integer_p(x.get()) && mpfr_sgn(x.get()) <= 0) {
      mpfr_set_zero(rg.get(), 1);
    } else {
      mpfr_gamma(g.get(), x.get(), MPFR_RNDN);
      mpfr_ui_div(rg.get(), 1, g.get(), MPFR_RNDN);
    }
    if (m) {
      mpfr_set(rg_ring[slot].get(), rg.get(), MPFR_RNDN);
      mpfr_set(x_ring[slot].get(), x.get(), MPFR_RNDN);
      positive_ring[slot] = mpfr_sgn(x.get()) > 0;
    }

    mpfr_mul(tr.get(), pr.get(), rg.get(), MPFR_RNDN);
    mpfr_add(sr.get(), sr.get(), tr.get(), MPFR_RNDN);
    double log2_term = tr.log2_abs();
    double log2_sum = sr.log2_abs();
    if (!real_axis) {
      mpfr_mul(ti.get(), pi.get(), rg.get(), MPFR_RNDN);
      mpfr_add(si.get(), si.get(), ti.get(), MPFR_RNDN);
      log2_term = std::max(log2_term, ti.log2_abs()) + 0.5;
      log2_sum = std::max(log2_sum, si.log2_abs());
    }
    if (cert.update(log2_term, log2_sum, xd, p.alpha, abs_z, -60.0))
      return {sr.to_double(), real_axis ? 0.0 : si.to_double()};

    if (real_axis) {
      mpfr_mul(pr.get(), pr.get(), zr.get(), MPFR_RNDN);
    } else {
      // (pr + i pi)(zr + i zi)
      mpfr_mul(tmp.get(), pr.get(), zr.get(), MPFR_RNDN);
      mpfr_mul(tmp2.get(), pi.get(), zi.get(), MPFR_RNDN);
      mpfr_mul(pi.get(), pi.get(), zr.get(), MPFR_RNDN);
      mpfr_fma(pi.get(), pr.get(), zi.get(), pi.get(), MPFR_RNDN);
      mpfr_sub(pr.get(), tmp.get(), tmp2.get(), MPFR_RNDN);
    }
  }
  throw convergence_error("mittag_leffler: series did not certify within max_terms");
}

} // namespace detail

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z).
///
/// Small arguments are summed in double precision. Beyond the switch radius the
/// partial sums are formed in MPFR arithmetic at a precision sized from the
/// largest term, so the cancellation of alternating terms is carried exactly.
/// Summation stops on a rigorous geometric tail bound.
inline std::complex<double> mittag_leffler(const MLParams& p, std::complex<double> z, const MLOptions& opt = {}) {
  p.validate();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw domain_error("mittag_leffler: non-finite argument");
  if (std::abs(z) <= opt.switch_radius_per_alpha * p.alpha)
    return detail::ml_double(p, z, opt);
  return detail::ml_multiprecision(p, z, opt);
}

inline double mittag_leffler(const MLParams& p, double x, const MLOptions& opt = {}) {
  return mittag_leffler(p, std::complex<double>(x, 0.0), opt).real();
}

/// Terms and running sums of the double-precision series, for inspection.
struct MLSeriesTrace {
  std::vector<std::complex<double>> terms;
  std::vector<std::complex<double>> partial_sums; // partial_sums[k] = sum_{j<=k} terms[j]
};

inline MLSeriesTrace mittag_leffler_trace(const MLParams& p, std::complex<double> z, std::size_t count) {
  p.validate();
  MLSeriesTrace out;
  out.terms.reserve(count);
  out.partial_sums.reserve(count);
  std::complex<double> power(1.0, 0.0), sum(0.0, 0.0);
  for (std::size_t k = 0; k < count; ++k) {
    const double x = p.alpha * static_cast<double>(k) + p.beta;
    const std::complex<double> term = power * ((x > 170.0) ? std::exp(-std::lgamma(x)) : rgamma(x));
    sum += term;
    out.terms.push_back(term);
    out.partial_sums.push_back(sum);
    power *= z;
  }
  return out;
}

/// Caputo derivative of sin of order alpha in (0, 1): t^{1-alpha} E_{2,2-alpha}(-t^2).
inline double caputo_sin_closed_form(double alpha, double t) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw domain_error("caputo_sin_closed_form: alpha must lie in (0, 1)");
  if (!(t > 0.0) || !std::isfinite(t))
    throw domain_error("caputo_sin_closed_form: t must be finite and > 0");
  return std::pow(t, 1.0 - alpha) * mittag_leffler(MLParams{2.0, 2.0 - alpha}, -t * t);
}

} // namespace fracper
