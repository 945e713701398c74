#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <utility>

#include "surfcover/errors.hpp"

namespace surfcover {

// Thrown internally when an interval is too wide to decide a sign, a
// comparison, or a tile-walk step. Drivers catch it, rebuild the hyperbolic
// model at doubled precision, and retry; PrecisionExhausted surfaces only
// once the ladder below is used up.
struct Inconclusive {};

constexpr mpfr_prec_t kDefaultPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = 1024;

// Closed interval [lo, hi] with mpfr endpoints. Lower endpoints round toward
// -inf and upper endpoints toward +inf, so an Iv always encloses the exact
// real it stands for no matter how many operations produced it.
class Iv {
 public:
  explicit Iv(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  Iv(const Iv& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }

  Iv(Iv&& o) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }

  Iv& operator=(Iv o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }

  ~Iv() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Iv num(long v, mpfr_prec_t prec) {
    Iv r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
  }

  static Iv pi(mpfr_prec_t prec) {
    Iv r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

 private:
  mpfr_t lo_, hi_;
};

inline mpfr_prec_t join_prec(const Iv& a, const Iv& b) {
  return std::max(a.prec(), b.prec());
}

inline Iv operator+(const Iv& a, const Iv& b) {
  Iv r(join_prec(a, b));
  mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

inline Iv operator-(const Iv& a, const Iv& b) {
  Iv r(join_prec(a, b));
  mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
  return r;
}

inline Iv operator-(const Iv& a) {
  Iv r(a.prec());
  mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  return r;
}

inline Iv operator*(const Iv& a, const Iv& b) {
  Iv r(join_prec(a, b));
  mpfr_t t;
  mpfr_init2(t, r.prec());
  // Lower endpoint: the smallest of the four endpoint products rounded down.
  mpfr_mul(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  // Upper endpoint: the largest rounded up.
  mpfr_mul(r.hi(), a.lo(), b.lo(), MPFR_RNDU);
  mpfr_mul(t, a.lo(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_mul(t, a.hi(), b.lo(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_mul(t, a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

// Certified sign: +1 when the whole interval is positive, -1 when negative.
// An interval straddling zero has no certified sign at this precision.
inline int certified_sign(const Iv& a) {
  if (mpfr_sgn(a.lo()) > 0) return 1;
  if (mpfr_sgn(a.hi()) < 0) return -1;
  throw Inconclusive{};
}

inline bool maybe_zero(const Iv& a) {
  return mpfr_sgn(a.lo()) <= 0 && mpfr_sgn(a.hi()) >= 0;
}

inline bool surely_positive(const Iv& a) { return mpfr_sgn(a.lo()) > 0; }
inline bool surely_negative(const Iv& a) { return mpfr_sgn(a.hi()) < 0; }

inline bool surely_less(const Iv& a, const Iv& b) {
  return mpfr_cmp(a.hi(), b.lo()) < 0;
}

inline bool overlaps(const Iv& a, const Iv& b) {
  return mpfr_cmp(a.lo(), b.hi()) <= 0 && mpfr_cmp(b.lo(), a.hi()) <= 0;
}

inline bool contains_int(const Iv& a, long k) {
  return mpfr_cmp_si(a.lo(), k) <= 0 && mpfr_cmp_si(a.hi(), k) >= 0;
}

inline Iv operator/(const Iv& a, const Iv& b) {
  int sb = certified_sign(b);
  (void)sb;
  Iv r(join_prec(a, b));
  mpfr_t t;
  mpfr_init2(t, r.prec());
  mpfr_div(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_div(t, a.lo(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_div(t, a.hi(), b.lo(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_div(t, a.hi(), b.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  mpfr_div(r.hi(), a.lo(), b.lo(), MPFR_RNDU);
  mpfr_div(t, a.lo(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_div(t, a.hi(), b.lo(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_div(t, a.hi(), b.hi(), MPFR_RNDU);
  mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

inline Iv sqrt(const Iv& a) {
  if (mpfr_sgn(a.hi()) < 0) throw Inconclusive{};
  Iv r(a.prec());
  if (mpfr_sgn(a.lo()) <= 0) {
    mpfr_set_zero(r.lo(), 1);
  } else {
    mpfr_sqrt(r.lo(), a.lo(), MPFR_RNDD);
  }
  mpfr_sqrt(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

inline Iv exp(const Iv& a) {
  Iv r(a.prec());
  mpfr_exp(r.lo(), a.lo(), MPFR_RNDD);
  mpfr_exp(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

inline Iv log(const Iv& a) {
  if (mpfr_sgn(a.lo()) <= 0) throw Inconclusive{};
  Iv r(a.prec());
  mpfr_log(r.lo(), a.lo(), MPFR_RNDD);
  mpfr_log(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

// acosh on [1, inf). An interval dipping slightly below 1 is clamped: the
// true argument of every use site is >= 1, so the clamp only widens.
inline Iv acosh(const Iv& a) {
  if (mpfr_cmp_si(a.hi(), 1) < 0) throw Inconclusive{};
  Iv r(a.prec());
  if (mpfr_cmp_si(a.lo(), 1) <= 0) {
    mpfr_set_zero(r.lo(), 1);
  } else {
    mpfr_acosh(r.lo(), a.lo(), MPFR_RNDD);
  }
  mpfr_acosh(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

inline Iv abs(const Iv& a) {
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return -a;
  Iv r(a.prec());
  mpfr_set_zero(r.lo(), 1);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  if (mpfr_cmp(a.hi(), r.hi()) > 0) mpfr_set(r.hi(), a.hi(), MPFR_RNDU);
  return r;
}

// Cosine, monotone decreasing on [0, pi]. Arguments must stay inside the
// principal range; anything else means the interval blew up.
inline Iv cos_0pi(const Iv& a) {
  Iv p = Iv::pi(a.prec());
  if (mpfr_sgn(a.lo()) < 0 || mpfr_cmp(a.hi(), p.lo()) > 0) throw Inconclusive{};
  Iv r(a.prec());
  mpfr_cos(r.lo(), a.hi(), MPFR_RNDD);
  mpfr_cos(r.hi(), a.lo(), MPFR_RNDU);
  return r;
}

// Sine on [0, pi]: increasing then decreasing with its hump at pi/2.
inline Iv sin_0pi(const Iv& a) {
  Iv p = Iv::pi(a.prec());
  if (mpfr_sgn(a.lo()) < 0 || mpfr_cmp(a.hi(), p.lo()) > 0) throw Inconclusive{};
  Iv r(a.prec());
  mpfr_t t, half_pi;
  mpfr_init2(t, a.prec());
  mpfr_init2(half_pi, a.prec());
  mpfr_const_pi(half_pi, MPFR_RNDN);
  mpfr_div_2ui(half_pi, half_pi, 1, MPFR_RNDN);
  mpfr_sin(r.lo(), a.lo(), MPFR_RNDD);
  mpfr_sin(t, a.hi(), MPFR_RNDD);
  mpfr_min(r.lo(), r.lo(), t, MPFR_RNDD);
  if (mpfr_cmp(a.lo(), half_pi) <= 0 && mpfr_cmp(a.hi(), half_pi) >= 0) {
    mpfr_set_si(r.hi(), 1, MPFR_RNDU);
  } else {
    mpfr_sin(r.hi(), a.lo(), MPFR_RNDU);
    mpfr_sin(t, a.hi(), MPFR_RNDU);
    mpfr_max(r.hi(), r.hi(), t, MPFR_RNDU);
  }
  mpfr_clear(t);
  mpfr_clear(half_pi);
  return r;
}

// Width bounded by 2^e, used for the model certificates.
inline bool width_leq_2exp(const Iv& a, long e) {
  mpfr_t w, bound;
  mpfr_init2(w, a.prec());
  mpfr_init2(bound, a.prec());
  mpfr_sub(w, a.hi(), a.lo(), MPFR_RNDU);
  mpfr_set_ui_2exp(bound, 1, e, MPFR_RNDN);
  bool ok = mpfr_cmp(w, bound) <= 0;
  mpfr_clear(w);
  mpfr_clear(bound);
  return ok;
}

// Integers k with floor possibly equal to k for some point of the interval,
// i.e. the range [floor(lo), floor(hi)]. Used to normalize axis phases.
inline std::pair<long, long> floor_range(const Iv& a) {
  mpfr_t t;
  mpfr_init2(t, a.prec());
  mpfr_floor(t, a.lo());
  long lo = mpfr_get_si(t, MPFR_RNDD);
  mpfr_floor(t, a.hi());
  long hi = mpfr_get_si(t, MPFR_RNDU);
  mpfr_clear(t);
  if (hi - lo > 1000) throw Inconclusive{};
  return {lo, hi};
}

inline double approx(const Iv& a) {
  return (mpfr_get_d(a.lo(), MPFR_RNDN) + mpfr_get_d(a.hi(), MPFR_RNDN)) / 2;
}

}  // namespace surfcover
