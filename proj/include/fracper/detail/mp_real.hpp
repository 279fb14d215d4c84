#pragma once

#include <mpfr.h>

#include <cmath>
#include <utility>

namespace fracper::detail {

/// Owning handle for an mpfr_t at a fixed precision. Arithmetic is done with
/// explicit in-place calls so the working precision never changes implicitly.
class MpReal {
public:
  explicit MpReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  MpReal(mpfr_prec_t bits, double x) : MpReal(bits) { mpfr_set_d(v_, x, MPFR_RNDN); }
  ~MpReal() {
    if (live_)
      mpfr_clear(v_);
  }

  MpReal(const MpReal& o) : MpReal(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  MpReal& operator=(const MpReal& o) {
    if (this != &o)
      mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  MpReal(MpReal&& o) noexcept {
    *v_ = *o.v_;
    o.live_ = false;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    std::swap(*v_, *o.v_);
    return *this;
  }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

  [[nodiscard]] double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  [[nodiscard]] bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }

  /// log2 |x| (approximate, -inf for zero); safe for magnitudes beyond double range.
  [[nodiscard]] double log2_abs() const noexcept {
    if (mpfr_zero_p(v_))
      return -INFINITY;
    long e = 0;
    const double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::abs(m)) + static_cast<double>(e);
  }

private:
  mpfr_t v_;
  bool live_ = true;
};

} // namespace fracper::detail
