#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace hyperwell {

/// RAII wrapper around an mpfr_t with a per-value mantissa width.
///
/// This is the extended-precision scalar backend: the recurrence and the root
/// scans are templated on the scalar type, and MpFloat drops in wherever
/// binary64 runs out of mantissa.  Precision propagates as the max of the
/// operand precisions; small integers mix in exactly via the *_si entry
/// points, so template code can write `x + (2*j + 3)` for either backend.
class MpFloat {
 public:
  static constexpr unsigned kDefaultPrec = 192;

  MpFloat() { mpfr_init2(v_, kDefaultPrec); mpfr_set_zero(v_, 1); }
  explicit MpFloat(unsigned prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_zero(v_, 1); }
  MpFloat(double x, unsigned prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  MpFloat(long x, unsigned prec_bits) {
    mpfr_init2(v_, prec_bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }

  MpFloat(const MpFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  MpFloat(MpFloat&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  MpFloat& operator=(const MpFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpFloat& operator=(MpFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpFloat() { mpfr_clear(v_); }

  unsigned precision_bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  /// Exact scaling by 2^e (exponent manipulation only).
  MpFloat ldexp2(long e) const {
    MpFloat r(precision_bits());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
  }

  /// log2 |x|; only meaningful for nonzero finite values.
  double log2_abs() const {
    long exp = 0;
    double m = mpfr_get_d_2exp(&exp, v_, MPFR_RNDN);
    if (m == 0.0) return -1e308;
    return std::log2(std::abs(m)) + static_cast<double>(exp);
  }

  friend MpFloat operator+(const MpFloat& a, const MpFloat& b) {
    MpFloat r(prec2(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend MpFloat operator-(const MpFloat& a, const MpFloat& b) {
    MpFloat r(prec2(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend MpFloat operator*(const MpFloat& a, const MpFloat& b) {
    MpFloat r(prec2(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend MpFloat operator/(const MpFloat& a, const MpFloat& b) {
    MpFloat r(prec2(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  MpFloat operator-() const {
    MpFloat r(precision_bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend MpFloat operator+(const MpFloat& a, long b) {
    MpFloat r(a.precision_bits());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend MpFloat operator+(long a, const MpFloat& b) { return b + a; }
  friend MpFloat operator-(const MpFloat& a, long b) {
    MpFloat r(a.precision_bits());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend MpFloat operator-(long a, const MpFloat& b) {
    MpFloat r(b.precision_bits());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend MpFloat operator*(const MpFloat& a, long b) {
    MpFloat r(a.precision_bits());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend MpFloat operator*(long a, const MpFloat& b) { return b * a; }
  friend MpFloat operator/(const MpFloat& a, long b) {
    MpFloat r(a.precision_bits());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend MpFloat operator/(long a, const MpFloat& b) {
    MpFloat r(b.precision_bits());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const MpFloat& a, const MpFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

  friend MpFloat abs(const MpFloat& a) {
    MpFloat r(a.precision_bits());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend MpFloat sqrt(const MpFloat& a) {
    MpFloat r(a.precision_bits());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  std::string to_string(int digits = 20) const;

 private:
  static unsigned prec2(const MpFloat& a, const MpFloat& b) {
    return std::max(a.precision_bits(), b.precision_bits());
  }
  mpfr_t v_;
};

}  // namespace hyperwell
