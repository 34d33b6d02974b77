#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperwell/model.hpp"
#include "hyperwell/scalar.hpp"

namespace hyperwell {

// Three-term recurrence for the Frobenius coefficients of the transformed
// eigenvalue equation in xi = 1/cosh^2(z):
//
//   c_{j+2} = A_j c_{j+1} + B_j c_j,   j = -1, 0, 1, ...,  c_{-1} = 0, c_0 = 1.
//
// The coefficients are written in the general parity form (gamma in {0,1});
// gamma = 0 collapses to the even-sector expressions.  The formulas are
// templated so the same source of truth runs in binary64, MPFR, and exact
// rational-function arithmetic.

namespace detail {
inline void check_j(long j) {
  if (j < -1) throw std::invalid_argument("recurrence index j must be >= -1");
}
}  // namespace detail

/// A_j(gamma, alpha, beta).  Denominator 4(beta+j+2)(j+2) is nonzero for
/// beta >= 0, j >= -1.
template <class S>
S coeff_A_generic(int gamma, const S& alpha, const S& beta, long j) {
  detail::check_j(j);
  const long g = gamma;
  // alpha^2 + 2 alpha (beta + 2j + 3) - beta^2 - beta (2g + 4j + 5)
  //   - g^2 - g (4j + 5) - 2 (j + 1)(2j + 3), all over 4 (beta + j + 2)(j + 2).
  S num = alpha * alpha + (alpha * 2L) * (beta + (2 * j + 3)) - beta * beta -
          beta * (2 * g + 4 * j + 5) - (g * g + g * (4 * j + 5) + 2 * (j + 1) * (2 * j + 3));
  S den = (beta + (j + 2)) * (4 * (j + 2));
  return -(num / den);
}

/// B_j(gamma, alpha, beta) = alpha (alpha + 2 beta + 2 gamma + 4j + 3) / (4 (beta+j+2)(j+2)).
template <class S>
S coeff_B_generic(int gamma, const S& alpha, const S& beta, long j) {
  detail::check_j(j);
  S num = alpha * (alpha + beta * 2L + (2L * gamma + 4 * j + 3));
  S den = (beta + (j + 2)) * (4 * (j + 2));
  return num / den;
}

/// Even-sector A_j in its factored arrangement,
/// -((beta+2j+3)(2 alpha - beta - 2(j+1)) + alpha^2) / (4 (beta+j+2)(j+2)).
/// Kept as an independent algebraic route; must agree with
/// coeff_A_generic(0, ...) to rounding error.
template <class S>
S coeff_A_even_factored(const S& alpha, const S& beta, long j) {
  detail::check_j(j);
  S num = (beta + (2 * j + 3)) * (alpha * 2L - beta - (2 * (j + 1))) + alpha * alpha;
  S den = (beta + (j + 2)) * (4 * (j + 2));
  return -(num / den);
}

// Truncation-branch coefficients with beta pinned to
// beta_n = -(alpha + 2 gamma + 4n + 3)/2, which kills B_n and lets the series
// terminate at degree n when additionally c_{n+1}(alpha) = 0.

template <class S>
S coeff_A_truncated(int gamma, const S& alpha, long n, long j) {
  detail::check_j(j);
  const long g = gamma;
  long d = j - n;
  S num = alpha * alpha + (alpha * 8L) * (g - 3 * j + 3 * n - 2) + ((4 * d + 1) * (4 * d + 3));
  S den = (alpha + (2 * g - 2 * j + 4 * n - 1)) * (8 * (j + 2));
  return -(num / den);
}

template <class S>
S coeff_B_truncated(int gamma, const S& alpha, long n, long j) {
  detail::check_j(j);
  S num = (alpha * 2L) * (n - j);
  S den = (alpha + (2L * gamma - 2 * j + 4 * n - 1)) * (j + 2);
  return num / den;
}

/// Relation between alpha and beta on the truncation branch.
template <class S>
S beta_n_generic(int gamma, const S& alpha, long n) {
  return -((alpha + (2L * gamma + 4 * n + 3)) / 2L);
}

inline double beta_n(Parity parity, double alpha, long n) {
  return beta_n_generic<double>(static_cast<int>(parity), alpha, n);
}

/// Frobenius coefficients c_0..c_N held as (mantissa, scale exponent) pairs,
/// entry value = mantissa * B^exponent with B = 2^500.  Rescaling is a pure
/// power-of-two exponent shift, so signs and the zero set of the c_j are
/// exactly those of the unscaled recurrence and the growth of the c_j can
/// never overflow the scalar.
template <class S>
struct ScaledCoefficientSequence {
  static constexpr long kRescaleLog2 = 500;

  struct Entry {
    S mantissa;     // |mantissa| in [1, B) or exactly 0
    long exponent;  // power of B
  };

  std::vector<Entry> entries;
  bool finite = true;

  static double rescale_base() { return std::ldexp(1.0, kRescaleLog2); }

  long order() const { return static_cast<long>(entries.size()) - 1; }

  int sign_of(long j) const { return scalar_sign(entries.at(j).mantissa); }

  /// Represented value of c_j in binary64; overflows to +-inf for entries
  /// beyond the double range (use log_magnitude_of there).
  double value_of(long j) const {
    const Entry& e = entries.at(j);
    return std::ldexp(scalar_to_double(e.mantissa), static_cast<int>(kRescaleLog2 * e.exponent));
  }

  /// Natural log of |c_j|; -inf for exact zeros.
  double log_magnitude_of(long j) const {
    const Entry& e = entries.at(j);
    if (scalar_sign(e.mantissa) == 0) return -std::numeric_limits<double>::infinity();
    double log2m = scalar_log2_abs(e.mantissa) + static_cast<double>(e.exponent) * kRescaleLog2;
    return log2m * std::numbers::ln2_v<double>;
  }
};

namespace detail {

template <class S>
void normalize_scaled(S& m, long& e) {
  if (scalar_sign(m) == 0) {
    e = 0;
    return;
  }
  constexpr long B = ScaledCoefficientSequence<S>::kRescaleLog2;
  const S base = scalar_ldexp2(scalar_from<S>(1.0, 64), B);
  const S one = scalar_from<S>(1.0, 64);
  S a = scalar_abs(m);
  while (!(a < base)) {
    m = scalar_ldexp2(m, -B);
    a = scalar_ldexp2(a, -B);
    ++e;
  }
  while (a < one) {
    m = scalar_ldexp2(m, B);
    a = scalar_ldexp2(a, B);
    --e;
  }
}

}  // namespace detail

/// Runs the recurrence for c_0..c_N at fixed (gamma, alpha, beta).
/// Preconditions: N >= 1, beta >= 0.
template <class S>
ScaledCoefficientSequence<S> coefficient_sequence_generic(int gamma, const S& alpha, const S& beta,
                                                          long N) {
  if (N < 1) throw std::invalid_argument("coefficient_sequence: N must be >= 1");
  if (scalar_sign(beta) < 0) throw std::invalid_argument("coefficient_sequence: beta must be >= 0");
  constexpr long B = ScaledCoefficientSequence<S>::kRescaleLog2;
  ScaledCoefficientSequence<S> seq;
  seq.entries.reserve(N + 1);

  S one = scalar_from<S>(1.0, 64);
  // c_{-1} = 0 at exponent 0, c_0 = 1 at exponent 0.
  S m_prev = scalar_from<S>(0.0, 64);  // c_{j}
  long e_prev = 0;
  S m_cur = one;  // c_{j+1}
  long e_cur = 0;
  seq.entries.push_back({m_cur, e_cur});

  for (long j = -1; j <= N - 2; ++j) {
    S a = coeff_A_generic(gamma, alpha, beta, j);
    S b = coeff_B_generic(gamma, alpha, beta, j);
    long eref = std::max(e_cur, e_prev);
    // Contributions more than two rescale steps below eref are < 2^-1000
    // relative and vanish harmlessly.
    S t1 = a * scalar_ldexp2(m_cur, B * (e_cur - eref));
    S t2 = b * scalar_ldexp2(m_prev, B * (e_prev - eref));
    S v = t1 + t2;
    long ev = eref;
    if (!scalar_finite(v)) {
      seq.finite = false;
      break;
    }
    detail::normalize_scaled(v, ev);
    seq.entries.push_back({v, ev});
    m_prev = m_cur;
    e_prev = e_cur;
    m_cur = v;
    e_cur = ev;
  }
  return seq;
}

/// Sign and log-magnitude of c_N.  This is the root-scan objective: only the
/// sign changes and exact zeros matter, and both are invariant under the
/// internal rescaling.
struct SignValue {
  int sign = 0;
  double log_magnitude = -std::numeric_limits<double>::infinity();
};

template <class S>
SignValue c_N_sign_value_generic(int gamma, const S& alpha, const S& beta, long N) {
  auto seq = coefficient_sequence_generic(gamma, alpha, beta, N);
  if (!seq.finite || seq.order() != N) {
    throw std::runtime_error("c_N_sign_value: coefficient sequence went non-finite");
  }
  SignValue sv;
  sv.sign = seq.sign_of(N);
  sv.log_magnitude = seq.log_magnitude_of(N);
  return sv;
}

// ModelContext-facing wrappers (binary64 in, binary64 out).

double coeff_A(const ModelContext& ctx, double beta, long j);
double coeff_B(const ModelContext& ctx, double beta, long j);
ScaledCoefficientSequence<double> coefficient_sequence(const ModelContext& ctx, double beta,
                                                       long N);
SignValue c_N_sign_value(const ModelContext& ctx, double beta, long N);

/// Collapses a scaled sequence to doubles with one shared power-of-two shift
/// chosen so the largest entry is O(1).  Relative values (all that matter for
/// wavefunction reconstruction, which renormalizes anyway) are preserved.
std::vector<double> series_coefficients_normalized(const ScaledCoefficientSequence<double>& seq);
std::vector<double> series_coefficients_normalized(const ScaledCoefficientSequence<MpFloat>& seq);

}  // namespace hyperwell
