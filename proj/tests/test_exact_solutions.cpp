#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperwell/exact_solutions.hpp"
#include "hyperwell/recurrence.hpp"
#include "hyperwell/serialize.hpp"
#include "hyperwell/spectrum.hpp"

using namespace hyperwell;

namespace {
const double kSqrt13 = std::sqrt(13.0);
}

TEST_CASE("beta_n boundary and reference values") {
  for (long n = 0; n <= 5; ++n) CHECK(beta_n(Parity::Even, -(4.0 * n + 3.0), n) == 0.0);
  CHECK(beta_n(Parity::Even, -4.0 - kSqrt13, 0) ==
        doctest::Approx((1.0 + kSqrt13) / 2.0).epsilon(1e-15));
  CHECK(beta_n(Parity::Odd, -9.0, 1) == 0.0);
}

TEST_CASE("truncation numerators match hand-expanded polynomials") {
  CHECK(truncation_numerator(Parity::Even, 0) == IntPoly::from_longs({3, 8, 1}));
  CHECK(truncation_numerator(Parity::Odd, 0) == IntPoly::from_longs({3, 16, 1}));
  // c_2 numerator for the even sector: (a^2+8a+3)(a^2+32a+35) + 128 a (a+5)
  CHECK(truncation_numerator(Parity::Even, 1) == IntPoly::from_longs({105, 1016, 422, 40, 1}));
  CHECK_THROWS_AS(truncation_numerator(Parity::Even, -1), std::invalid_argument);
}

TEST_CASE("degree is 2(n+1) and every root is real for n <= 8") {
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (long n = 0; n <= 8; ++n) {
      auto rep = alpha_roots(p, n, 1e-10);
      CHECK(rep.degree == 2 * (n + 1));
      CHECK(rep.real_count == rep.degree);  // reported, and so far always saturated
    }
  }
}

TEST_CASE("desk-scale ceiling: n = 12 stays exact and fully real") {
  auto rep = alpha_roots(Parity::Even, 12, 1e-10);
  CHECK(rep.degree == 26);
  CHECK(rep.real_count == 26);
}

TEST_CASE("n=0 even roots are -4 +- sqrt(13)") {
  auto rep = alpha_roots(Parity::Even, 0, 1e-14);
  REQUIRE(rep.roots.size() == 2);
  CHECK(rep.roots[0].approx() == doctest::Approx(-4.0 - kSqrt13).epsilon(1e-14));
  CHECK(rep.roots[1].approx() == doctest::Approx(-4.0 + kSqrt13).epsilon(1e-14));
}

TEST_CASE("physical filter keeps the inner-window root only") {
  auto rep = alpha_roots(Parity::Even, 0, 1e-14);
  auto win = physical_window(Parity::Even, 0);
  CHECK(win.hi == -3.0);
  CHECK(win.lo == doctest::Approx(-3.0 * (27.0 + 12.0 * std::sqrt(3.0)) / 11.0).epsilon(1e-15));
  auto kept = physical_filter(Parity::Even, 0, rep.defining, rep.roots);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].approx() == doctest::Approx(-4.0 - kSqrt13).epsilon(1e-12));
  // empty input stays empty
  CHECK(physical_filter(Parity::Even, 0, rep.defining, {}).empty());
}

TEST_CASE("a root exactly on the open boundary is rejected") {
  // -(4n+3) = -3 is a root of (x+3)(x+20); beta would vanish there.
  IntPoly p = IntPoly::from_longs({3, 1}) * IntPoly::from_longs({20, 1});
  auto roots = isolate_real_roots(p, Rat(1, 1 << 20));
  REQUIRE(roots.size() == 2);
  auto kept = physical_filter(Parity::Even, 0, squarefree_part(p), roots);
  // -20 is outside the lower bound too, so nothing survives
  for (auto& r : kept) CHECK(r.approx() != doctest::Approx(-3.0));
  IntPoly q = IntPoly::from_longs({3, 1}) * IntPoly::from_longs({8, 1});
  auto roots_q = isolate_real_roots(q, Rat(1, 1 << 20));
  auto kept_q = physical_filter(Parity::Even, 0, squarefree_part(q), roots_q);
  REQUIRE(kept_q.size() == 1);  // -8 is inside, -3 is on the boundary: rejected
  CHECK(kept_q[0].approx() == doctest::Approx(-8.0));
}

TEST_CASE("window bounds and beta bounds are the same condition") {
  std::mt19937_64 rng(29);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (long n = 0; n <= 4; ++n) {
      auto rep = alpha_roots(p, n, 1e-12);
      auto mask_roots = rep.roots;
      auto mask = physical_mask(p, n, rep.defining, mask_roots);
      auto win = physical_window(p, n);
      for (size_t i = 0; i < rep.roots.size(); ++i) {
        double a = rep.roots[i].approx();
        double bn = beta_n(p, a, n);
        ModelContext ctx(p, a);
        bool beta_ok = bn > 0 && bn < ctx.beta_max();
        bool win_ok = a > win.lo && a < win.hi;
        CHECK(mask[i] == beta_ok);
        CHECK(mask[i] == win_ok);
      }
    }
  }
  (void)rng;
}

TEST_CASE("assembled n=0 solution carries the closed-form data") {
  auto en = enumerate_exact(Parity::Even, 0, 1e-14);
  REQUIRE(en.accepted.size() == 1);
  REQUIRE(en.rejected.size() == 1);
  const auto& s = en.accepted[0];
  CHECK(s.index == 1);
  CHECK(s.alpha_f == doctest::Approx(-4.0 - kSqrt13).epsilon(1e-14));
  CHECK(s.beta == doctest::Approx((1.0 + kSqrt13) / 2.0).epsilon(1e-14));
  CHECK(s.epsilon == doctest::Approx(-(7.0 + kSqrt13) / 2.0).epsilon(1e-14));
  CHECK(s.certified_digits >= 25);
  CHECK(s.alpha_decimal.substr(0, 19) == "-7.6055512754639892");
  REQUIRE(s.coeffs_float.size() == 1);
  CHECK(s.coeffs_float[0] == 1.0);
  // epsilon inside the depth bound (-4 alpha^2/27, 0)
  CHECK(s.epsilon > -4.0 * s.alpha_f * s.alpha_f / 27.0);
  CHECK(s.epsilon < 0.0);
}

TEST_CASE("residual is exactly zero for accepted solutions up to n=2") {
  std::vector<Rat> pts{Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1, 7), Rat(9, 10)};
  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (long n = 0; n <= 2; ++n) {
      auto en = enumerate_exact(p, n, 1e-12);
      CHECK(en.accepted.size() == static_cast<size_t>(n + 1));
      for (const auto& sol : en.accepted) {
        auto res = residual_check(sol, pts);
        CHECK(res.exact_zero);
        CHECK(res.max_abs_float == 0.0);
      }
    }
  }
}

TEST_CASE("perturbing beta breaks the residual (negative control)") {
  auto en = enumerate_exact(Parity::Even, 1, 1e-12);
  REQUIRE(!en.accepted.empty());
  const auto& s = en.accepted[0];
  double bad = residual_operator_double(s.gamma, s.alpha_f, s.beta + 1e-6, s.coeffs_float, 0.5);
  CHECK(std::abs(bad) > 1e-8);
  double good = residual_operator_double(s.gamma, s.alpha_f, s.beta, s.coeffs_float, 0.5);
  CHECK(std::abs(good) < 1e-10);
}

TEST_CASE("residual sample points must lie in (0,1)") {
  auto en = enumerate_exact(Parity::Even, 0, 1e-12);
  CHECK_THROWS_AS(residual_check(en.accepted[0], {Rat(2)}), std::invalid_argument);
}

TEST_CASE("numeric scan re-finds the truncation root at any order") {
  auto en = enumerate_exact(Parity::Even, 0, 1e-14);
  const auto& s = en.accepted[0];
  ModelContext ctx(Parity::Even, s.alpha_f);
  ScanConfig cfg;
  for (long N : {2L, 7L, 25L}) {
    auto roots = beta_roots_at_order(ctx, N, cfg);
    bool found = false;
    for (double r : roots) found = found || std::abs(r - s.beta) < 1e-10;
    CHECK(found);
  }
}

TEST_CASE("JSON serialization carries the exact record") {
  auto en = enumerate_exact(Parity::Even, 0, 1e-14);
  auto j = to_json(en.accepted[0]);
  CHECK(j["gamma"] == 0);
  CHECK(j["n"] == 0);
  CHECK(j["i"] == 1);
  CHECK(std::string(j["alpha"]).substr(0, 10) == "-7.6055512");
  CHECK(j["defining_polynomial"].size() == 3);
  CHECK(j["defining_polynomial"][0] == "3");
  CHECK(j["coefficients_exact"].size() == 1);
  CHECK(j["coefficients_float"][0] == 1.0);
  CHECK(j["beta"].get<double>() == doctest::Approx((1.0 + kSqrt13) / 2.0));
}
