#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperwell/recurrence.hpp"

using namespace hyperwell;

namespace {
const double kSqrt13 = std::sqrt(13.0);
}

TEST_CASE("coefficient formulas reproduce hand-evaluated values") {
  ModelContext ctx(Parity::Even, -3.0);
  // -((beta+1)(2a-b) + a^2) / (4(beta+1)) at (a,b,j)=(-3,1,-1) -> 5/8
  CHECK(coeff_A(ctx, 1.0, -1) == doctest::Approx(5.0 / 8.0).epsilon(1e-15));
  // a(a+2b-1)/(4(b+1)) at the same point -> 3/4
  CHECK(coeff_B(ctx, 1.0, -1) == doctest::Approx(3.0 / 4.0).epsilon(1e-15));
  // alpha = 0, beta = 0, j = 0: -(3*(-2)+0)/(4*2*2) = 3/8
  CHECK(coeff_A_generic<double>(0, 0.0, 0.0, 0) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
  // odd sector, same inputs as the first case: direct evaluation gives 9/8
  CHECK(coeff_A_generic<double>(1, -3.0, 1.0, -1) == doctest::Approx(9.0 / 8.0).epsilon(1e-15));
}

TEST_CASE("B vanishes with alpha and on the truncation branch") {
  CHECK(coeff_B_generic<double>(0, 0.0, 0.7, 3) == 0.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> adist(-30.0, -0.01);
  std::uniform_int_distribution<int> ndist(0, 9), gdist(0, 1);
  for (int i = 0; i < 1000; ++i) {
    int g = gdist(rng);
    long n = ndist(rng);
    double a = adist(rng);
    double bn = beta_n_generic<double>(g, a, n);
    if (bn < 0) continue;  // recurrence preconditions assume beta >= 0
    CHECK(std::abs(coeff_B_generic<double>(g, a, bn, n)) < 1e-13);
  }
}

TEST_CASE("index preconditions are enforced") {
  ModelContext ctx(Parity::Even, -2.0);
  CHECK_THROWS_AS(coeff_A(ctx, 1.0, -2), std::invalid_argument);
  CHECK_THROWS_AS(coeff_B(ctx, 1.0, -5), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_sequence(ctx, -0.5, 5), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_sequence(ctx, 1.0, 0), std::invalid_argument);
}

TEST_CASE("even-sector factored form equals the general form at gamma=0") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> adist(-25.0, 0.0), bdist(0.0, 12.0);
  std::uniform_int_distribution<long> jdist(-1, 40);
  for (int i = 0; i < 10000; ++i) {
    double a = adist(rng), b = bdist(rng);
    long j = jdist(rng);
    double lhs = coeff_A_generic<double>(0, a, b, j);
    double rhs = coeff_A_even_factored<double>(a, b, j);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("truncated closed forms equal direct substitution of beta_n") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> gdist(0, 1);
  std::uniform_int_distribution<long> ndist(0, 10);
  for (int i = 0; i < 10000; ++i) {
    int g = gdist(rng);
    long n = ndist(rng);
    std::uniform_int_distribution<long> jdist(-1, n + 1);
    long j = jdist(rng);
    // stay inside the physically interesting strip, away from the poles
    std::uniform_real_distribution<double> adist(-(4.0 * n + 3 + 2 * g) * 4.5,
                                                 -(4.0 * n + 3 + 2 * g) - 0.05);
    double a = adist(rng);
    double pole = static_cast<double>(2 * j + 1 - 4 * n - 2 * g);
    if (std::abs(a - pole) < 0.05) continue;
    double bn = beta_n_generic<double>(g, a, n);
    if (bn < 0) continue;
    double a_direct = coeff_A_generic<double>(g, a, bn, j);
    double a_closed = coeff_A_truncated<double>(g, a, n, j);
    CHECK(std::abs(a_direct - a_closed) <= 1e-11 * std::max(1.0, std::abs(a_direct)));
    double b_direct = coeff_B_generic<double>(g, a, bn, j);
    double b_closed = coeff_B_truncated<double>(g, a, n, j);
    CHECK(std::abs(b_direct - b_closed) <= 1e-11 * std::max(1.0, std::abs(b_direct)));
  }
}

TEST_CASE("coefficient sequence starts at exactly one and matches c_1 = A_{-1}") {
  ModelContext ctx(Parity::Even, -3.0);
  auto seq = coefficient_sequence(ctx, 1.0, 1);
  REQUIRE(seq.entries.size() == 2);
  CHECK(seq.entries[0].mantissa == 1.0);
  CHECK(seq.entries[0].exponent == 0);
  // c_1 = 5/8 < 1, so it is stored up-scaled with a negative scale exponent
  CHECK(seq.value_of(1) == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(seq.entries[1].exponent == -1);
  CHECK(std::abs(seq.entries[1].mantissa) >= 1.0);
  CHECK(seq.finite);
}

TEST_CASE("truncation root annihilates c_1 and c_2 and flips sign across it") {
  double alpha = -4.0 - kSqrt13;
  double beta0 = (1.0 + kSqrt13) / 2.0;
  ModelContext ctx(Parity::Even, alpha);
  auto seq = coefficient_sequence(ctx, beta0, 3);
  // binary64 cannot hold the algebraic point exactly; the residuals must be
  // at roundoff scale while neighbors are O(1).
  CHECK(std::abs(seq.value_of(1)) < 1e-13);
  CHECK(std::abs(seq.value_of(2)) < 1e-13);
  auto lo = c_N_sign_value(ctx, beta0 - 1e-6, 2);
  auto hi = c_N_sign_value(ctx, beta0 + 1e-6, 2);
  CHECK(lo.sign * hi.sign == -1);
  auto at = c_N_sign_value(ctx, beta0, 2);
  CHECK(at.log_magnitude < lo.log_magnitude - 10.0);
  CHECK(at.log_magnitude < hi.log_magnitude - 10.0);
}

TEST_CASE("c_N sign objective reports value sign and magnitude") {
  ModelContext ctx(Parity::Even, -3.0);
  auto sv = c_N_sign_value(ctx, 1.0, 1);
  CHECK(sv.sign == +1);
  CHECK(sv.log_magnitude == doctest::Approx(std::log(0.625)).epsilon(1e-12));
}

TEST_CASE("rescaling keeps every mantissa inside [1, B) and signs exact") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> adist(-60.0, -1.0), bfrac(0.05, 0.95);
  std::uniform_int_distribution<int> gdist(0, 1);
  const double B = ScaledCoefficientSequence<double>::rescale_base();
  for (int i = 0; i < 200; ++i) {
    int g = gdist(rng);
    double a = adist(rng);
    ModelContext ctx(g == 0 ? Parity::Even : Parity::Odd, a);
    double beta = bfrac(rng) * ctx.beta_max();
    auto seq = coefficient_sequence(ctx, beta, 120);
    REQUIRE(seq.finite);
    for (const auto& e : seq.entries) {
      double m = std::abs(e.mantissa);
      if (m != 0.0) {
        CHECK(m >= 1.0);
        CHECK(m < B);
      }
    }
  }
}

TEST_CASE("binary64 and multiprecision sequences agree where well-conditioned") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> adist(-40.0, -0.5), bfrac(0.05, 0.95);
  std::uniform_int_distribution<int> gdist(0, 1);
  for (int i = 0; i < 50; ++i) {
    int g = gdist(rng);
    double a = adist(rng);
    ModelContext ctx(g == 0 ? Parity::Even : Parity::Odd, a);
    double beta = bfrac(rng) * ctx.beta_max();
    long N = 80;
    auto seq_d = coefficient_sequence(ctx, beta, N);
    MpFloat am(a, 256), bm(beta, 256);
    auto seq_m = coefficient_sequence_generic<MpFloat>(g, am, bm, N);
    double peak = -1e300;
    for (long j = 0; j <= N; ++j) peak = std::max(peak, seq_m.log_magnitude_of(j));
    for (long j = 0; j <= N; ++j) {
      // Entries far below the running peak are pure cancellation noise in
      // binary64; their signs are not defined by the arithmetic model.
      if (seq_m.log_magnitude_of(j) < peak - 25.0) continue;
      CHECK(seq_d.sign_of(j) == seq_m.sign_of(j));
    }
  }
}

TEST_CASE("normalized series coefficients preserve relative values") {
  ModelContext ctx(Parity::Even, -3.0);
  auto seq = coefficient_sequence(ctx, 1.0, 6);
  auto flat = series_coefficients_normalized(seq);
  REQUIRE(flat.size() == 7);
  // No rescale happens at this size, so values are the plain c_j.
  CHECK(flat[0] == 1.0);
  CHECK(flat[1] == doctest::Approx(0.625).epsilon(1e-15));
  // ratios stay intact after the common shift
  auto seq_big = coefficient_sequence(ctx, 1.0, 400);
  auto flat_big = series_coefficients_normalized(seq_big);
  CHECK(flat_big[1] / flat_big[0] == doctest::Approx(0.625).epsilon(1e-12));
}
