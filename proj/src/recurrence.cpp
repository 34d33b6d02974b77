#include "hyperwell/recurrence.hpp"

#include <algorithm>

namespace hyperwell {

double coeff_A(const ModelContext& ctx, double beta, long j) {
  return coeff_A_generic<double>(ctx.gamma(), ctx.alpha(), beta, j);
}

double coeff_B(const ModelContext& ctx, double beta, long j) {
  return coeff_B_generic<double>(ctx.gamma(), ctx.alpha(), beta, j);
}

ScaledCoefficientSequence<double> coefficient_sequence(const ModelContext& ctx, double beta,
                                                       long N) {
  return coefficient_sequence_generic<double>(ctx.gamma(), ctx.alpha(), beta, N);
}

SignValue c_N_sign_value(const ModelContext& ctx, double beta, long N) {
  return c_N_sign_value_generic<double>(ctx.gamma(), ctx.alpha(), beta, N);
}

namespace {

template <class S>
std::vector<double> to_doubles_impl(const ScaledCoefficientSequence<S>& seq) {
  long e_max = 0;
  bool any = false;
  for (const auto& en : seq.entries) {
    if (scalar_sign(en.mantissa) != 0) {
      e_max = any ? std::max(e_max, en.exponent) : en.exponent;
      any = true;
    }
  }
  std::vector<double> out;
  out.reserve(seq.entries.size());
  constexpr long B = ScaledCoefficientSequence<S>::kRescaleLog2;
  for (const auto& en : seq.entries) {
    if (scalar_sign(en.mantissa) == 0) {
      out.push_back(0.0);
      continue;
    }
    // Entries more than two rescale steps below the peak underflow to zero;
    // they are < 2^-1000 of the peak and cannot matter for any xi in (0,1].
    long shift = B * (en.exponent - e_max);
    if (shift < -1020) {
      out.push_back(0.0);
    } else {
      out.push_back(std::ldexp(scalar_to_double(en.mantissa), static_cast<int>(shift)));
    }
  }
  return out;
}

}  // namespace

std::vector<double> series_coefficients_normalized(const ScaledCoefficientSequence<double>& seq) {
  return to_doubles_impl(seq);
}

std::vector<double> series_coefficients_normalized(const ScaledCoefficientSequence<MpFloat>& seq) {
  return to_doubles_impl(seq);
}

}  // namespace hyperwell
