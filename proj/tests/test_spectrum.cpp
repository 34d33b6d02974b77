#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hyperwell/spectrum.hpp"

using namespace hyperwell;

namespace {
const double kSqrt13 = std::sqrt(13.0);
const double kExactV0 = 57.8444102037119143;  // (4+sqrt(13))^2
}

TEST_CASE("spectrum at the n=0 exact coupling contains the closed-form state") {
  ScanConfig cfg;
  SpectrumResult res = spectrum(kExactV0, cfg);
  REQUIRE(!res.states.empty());
  CHECK(res.states[0].parity == Parity::Even);
  CHECK(res.states[0].nu == 0);
  CHECK(res.states[0].epsilon == doctest::Approx(-(7.0 + kSqrt13) / 2.0).epsilon(1e-10));
  CHECK(res.diagnostics.parity_alternation_ok);
  double bound = -4.0 * kExactV0 / 27.0;
  for (const auto& s : res.states) {
    CHECK(s.epsilon > bound);
    CHECK(s.epsilon < 0.0);
    CHECK(s.beta > 0.0);
    CHECK(s.beta < 2.0 * std::sqrt(kExactV0) / std::sqrt(27.0));
    CHECK(s.status == ChainStatus::Converged);
    CHECK(s.drift <= cfg.conv_tol);
  }
  // alternation: even, odd, even, odd
  for (size_t i = 0; i < res.states.size(); ++i)
    CHECK(res.states[i].parity == (i % 2 == 0 ? Parity::Even : Parity::Odd));
}

TEST_CASE("shallow well: one even state, no odd state") {
  ScanConfig cfg;
  ModelContext even(Parity::Even, -2.0);  // v0 = 4 < v0_1
  auto ev = eigenvalues(even, cfg);
  CHECK(ev.size() == 1);
  ModelContext odd(Parity::Odd, -2.0);
  auto od = eigenvalues(odd, cfg);
  CHECK(od.empty());
  auto count = bound_state_count(4.0, cfg);
  CHECK(count.count == 1);
  CHECK(!count.ambiguous);
}

TEST_CASE("bound state counts step across the first thresholds") {
  ScanConfig cfg;
  CHECK(bound_state_count(10.0, cfg).count == 2);  // v0_1 ~ 4.298 < 10 < v0_2 ~ 27.80
  CHECK(bound_state_count(30.0, cfg).count == 3);  // 27.80 < 30 < v0_3 ~ 38.21
}

TEST_CASE("roots never sit on the interval endpoints") {
  ScanConfig cfg;
  ModelContext ctx(Parity::Even, -7.0);
  for (long N : {10L, 30L, 60L}) {
    auto roots = beta_roots_at_order(ctx, N, cfg);
    for (double r : roots) {
      CHECK(r > 0.0);
      CHECK(r < ctx.beta_max());
    }
  }
}

TEST_CASE("beta window restriction finds the same root") {
  ModelContext ctx(Parity::Even, -4.0 - kSqrt13);
  double target = (1.0 + kSqrt13) / 2.0;
  ScanConfig cfg;
  cfg.beta_window_lo = target - 0.05;
  cfg.beta_window_hi = target + 0.05;
  auto roots = beta_roots_at_order(ctx, 12, cfg);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == doctest::Approx(target).epsilon(1e-10));
}

TEST_CASE("critical couplings reproduce the reference table in binary64") {
  ScanConfig cfg;
  std::vector<std::string> warn;
  auto even = critical_alpha(Parity::Even, {2, 4}, cfg, &warn);
  REQUIRE(even.size() == 2);
  CHECK(even[0].K == 2);
  CHECK(even[0].alpha == doctest::Approx(-5.272715881).epsilon(1e-9));
  CHECK(even[0].v0 == doctest::Approx(27.80153274).epsilon(1e-8));
  CHECK(even[1].K == 4);
  CHECK(even[1].alpha == doctest::Approx(-9.398121349).epsilon(1e-9));
  auto odd = critical_alpha(Parity::Odd, {1, 3}, cfg, &warn);
  REQUIRE(odd.size() == 2);
  CHECK(odd[0].K == 1);
  CHECK(odd[0].alpha == doctest::Approx(-2.073164811).epsilon(1e-8));
  CHECK(odd[1].K == 3);
  CHECK(odd[1].alpha == doctest::Approx(-6.181847266).epsilon(1e-8));
  for (const auto& cv : even) CHECK(cv.status == ChainStatus::Converged);
  // strict ordering invariants
  CHECK(even[0].alpha > even[1].alpha);
  CHECK(even[0].v0 < even[1].v0);
}

TEST_CASE("critical_alpha validates its inputs") {
  ScanConfig cfg;
  CHECK_THROWS_AS(critical_alpha(Parity::Even, {}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(critical_alpha(Parity::Even, {1}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(critical_alpha(Parity::Odd, {2}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(critical_alpha(Parity::Odd, {0}, cfg), std::invalid_argument);
}

TEST_CASE("scan configuration invariants are enforced") {
  ModelContext ctx(Parity::Even, -3.0);
  ScanConfig bad;
  bad.N_schedule = {20, 10};
  CHECK_THROWS_AS(eigenvalues(ctx, bad), std::invalid_argument);
  ScanConfig bad2;
  bad2.conv_tol = -1.0;
  CHECK_THROWS_AS(eigenvalues(ctx, bad2), std::invalid_argument);
  ScanConfig bad3;
  bad3.root_tol = 0.0;
  CHECK_THROWS_AS(beta_roots_at_order(ctx, 10, bad3), std::invalid_argument);
  ScanConfig bad4;
  bad4.grid_points = 2;
  CHECK_THROWS_AS(eigenvalues(ctx, bad4), std::invalid_argument);
}

TEST_CASE("merged critical table is ordered with alternating parity") {
  ScanConfig cfg;  // binary64 is plenty for K <= 4
  auto even = critical_alpha(Parity::Even, {2, 4}, cfg);
  auto odd = critical_alpha(Parity::Odd, {1, 3}, cfg);
  std::vector<CriticalValue> all;
  all.insert(all.end(), even.begin(), even.end());
  all.insert(all.end(), odd.begin(), odd.end());
  std::sort(all.begin(), all.end(),
            [](const CriticalValue& a, const CriticalValue& b) { return a.K < b.K; });
  REQUIRE(all.size() == 4);
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].K == static_cast<int>(i + 1));
    CHECK(all[i].parity == ((i + 1) % 2 == 0 ? Parity::Even : Parity::Odd));
    if (i > 0) {
      CHECK(all[i].alpha < all[i - 1].alpha);
      CHECK(all[i].v0 > all[i - 1].v0);
    }
  }
}

TEST_CASE("multiprecision backend agrees with binary64 on a moderate well") {
  ScanConfig cfg64;
  ScanConfig cfgmp;
  cfgmp.backend = Backend::MultiPrec;
  cfgmp.precision_bits = 192;
  SpectrumResult a = spectrum(100.0, cfg64);
  SpectrumResult b = spectrum(100.0, cfgmp);
  REQUIRE(a.states.size() == b.states.size());
  for (size_t i = 0; i < a.states.size(); ++i)
    CHECK(a.states[i].epsilon == doctest::Approx(b.states[i].epsilon).epsilon(1e-11));
}

TEST_CASE("deep well ground state sits near the harmonic prediction") {
  ScanConfig cfg;
  cfg.N_schedule = ScanConfig::schedule_to(200, 20, 20);
  SpectrumResult res = spectrum(1764.0, cfg);
  REQUIRE(res.states.size() >= 2);
  // frozen from the finite-difference oracle with Richardson refinement
  CHECK(res.states[0].epsilon == doctest::Approx(-239.2599574).epsilon(2e-7));
  double asymp = -4.0 * 1764.0 / 27.0 + 2.0 * std::sqrt(2.0 * 1764.0 / 27.0);
  CHECK(std::abs(res.states[0].epsilon - asymp) < 2.0);
  CHECK(res.diagnostics.parity_alternation_ok);
}

TEST_CASE("shallow-coupling limit matches the contact-well formula") {
  // For v0 -> 0 the single even state obeys eps0 ~ -(integral v / 2)^2 with
  // integral sinh^4/cosh^6 dz = 2/5, i.e. eps0 ~ -0.04 v0^2.
  ScanConfig cfg;
  cfg.N_schedule = ScanConfig::schedule_to(120, 10, 10);
  SpectrumResult r = spectrum(0.01, cfg);
  REQUIRE(r.states.size() == 1);
  CHECK(r.states[0].epsilon == doctest::Approx(-0.04 * 1e-4).epsilon(0.05));
}

TEST_CASE("eigenvalues decrease monotonically with the coupling") {
  ScanConfig cfg;
  double prev0 = 0.0, prev1 = 0.0;
  bool first = true;
  for (double v0 : {10.0, 20.0, 40.0, 80.0}) {
    SpectrumResult r = spectrum(v0, cfg);
    REQUIRE(r.states.size() >= 2);
    if (!first) {
      CHECK(r.states[0].epsilon < prev0);
      CHECK(r.states[1].epsilon < prev1);
    }
    prev0 = r.states[0].epsilon;
    prev1 = r.states[1].epsilon;
    first = false;
  }
}

TEST_CASE("count steps by exactly one across the first threshold (1%)") {
  ScanConfig ccfg;
  ccfg.backend = Backend::MultiPrec;
  ccfg.precision_bits = 192;
  auto odd = critical_alpha(Parity::Odd, {1}, ccfg);
  REQUIRE(odd.size() == 1);
  double v01 = odd[0].v0;
  ScanConfig cfg;
  cfg.N_schedule = ScanConfig::schedule_to(160, 10, 10);
  CHECK(spectrum(v01 * 0.99, cfg).states.size() == 1);
  CHECK(spectrum(v01 * 1.01, cfg).states.size() == 2);
}

TEST_CASE("near-threshold counts are flagged ambiguous with a table") {
  ScanConfig cfg;
  std::vector<CriticalValue> table(1);
  table[0].K = 1;
  table[0].v0 = 4.29801;
  auto c = bound_state_count(4.29801 * (1 + 5e-4), cfg, &table);
  CHECK(c.ambiguous);
  auto c2 = bound_state_count(10.0, cfg, &table);
  CHECK(!c2.ambiguous);
}

TEST_CASE("series coefficients warn when the tail is not negligible") {
  ModelContext ctx(Parity::Even, -20.0);
  ScanConfig cfg;
  std::vector<std::string> warn;
  // far from any eigenvalue, the series does not converge at small N
  numeric_series_coefficients(ctx, 0.37 * ctx.beta_max(), 12, cfg, &warn);
  CHECK(!warn.empty());
}
