#pragma once

#include <cmath>

#include "hyperwell/mp_float.hpp"

namespace hyperwell {

/// Numeric backend selector for the scan machinery.  Float64 is the default;
/// MultiPrec switches the whole recurrence/bisection path to MpFloat with the
/// configured mantissa width.
enum class Backend { Float64, MultiPrec };

// Customization points shared by double and MpFloat so the recurrence and
// bisection code can be written once.

inline double scalar_from(double x, unsigned /*prec_bits*/, const double*) { return x; }
inline MpFloat scalar_from(double x, unsigned prec_bits, const MpFloat*) {
  return MpFloat(x, prec_bits);
}

template <class S>
S scalar_from(double x, unsigned prec_bits) {
  return scalar_from(x, prec_bits, static_cast<const S*>(nullptr));
}

inline double scalar_to_double(double x) { return x; }
inline double scalar_to_double(const MpFloat& x) { return x.to_double(); }

inline int scalar_sign(double x) { return (x > 0.0) - (x < 0.0); }
inline int scalar_sign(const MpFloat& x) { return x.sign(); }

inline bool scalar_finite(double x) { return std::isfinite(x); }
inline bool scalar_finite(const MpFloat& x) { return x.is_finite(); }

/// Exact multiplication by 2^e.
inline double scalar_ldexp2(double x, long e) { return std::ldexp(x, static_cast<int>(e)); }
inline MpFloat scalar_ldexp2(const MpFloat& x, long e) { return x.ldexp2(e); }

/// log2|x| for nonzero x.
inline double scalar_log2_abs(double x) { return std::log2(std::abs(x)); }
inline double scalar_log2_abs(const MpFloat& x) { return x.log2_abs(); }

inline double scalar_abs(double x) { return std::abs(x); }
inline MpFloat scalar_abs(const MpFloat& x) { return abs(x); }

inline double scalar_sqrt(double x) { return std::sqrt(x); }
inline MpFloat scalar_sqrt(const MpFloat& x) { return sqrt(x); }

}  // namespace hyperwell
