#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperwell/asymptotics.hpp"
#include "hyperwell/fd_oracle.hpp"

using namespace hyperwell;

TEST_CASE("potential geometry") {
  CHECK(potential(0.0, 5.0) == 0.0);
  const double zp = std::log(std::sqrt(3.0) + std::sqrt(2.0));
  CHECK(potential(zp, 27.0) == doctest::Approx(-4.0).epsilon(1e-14));
  CHECK(potential(-zp, 27.0) == doctest::Approx(-4.0).epsilon(1e-14));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> zdist(-30.0, 30.0);
  for (int i = 0; i < 1000; ++i) {
    double z = zdist(rng);
    CHECK(potential(z, 3.0) == potential(-z, 3.0));
    CHECK(potential(z, 3.0) <= 0.0);
    CHECK(potential(z, 3.0) >= -4.0 * 3.0 / 27.0);
  }
  // decays to zero far away, and stays finite where cosh overflows
  CHECK(std::abs(potential(40.0, 1e4)) < 1e-30);
  CHECK(std::abs(potential(1000.0, 1e4)) >= 0.0);
  CHECK(std::isfinite(potential(1000.0, 1e4)));
  CHECK_THROWS_AS(potential(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("well geometry matches the Taylor data") {
  WellGeometry g = well_geometry(27.0);
  CHECK(g.z_plus == doctest::Approx(1.1462158347805889).epsilon(1e-15));
  CHECK(g.z_minus == -g.z_plus);
  CHECK(g.depth == -4.0);
  CHECK(g.curvature == 16.0);
  CHECK(g.taylor_quadratic() == 8.0);
  // curvature against central finite differences of the potential
  for (double v0 : {27.0, 100.0, 1764.0}) {
    WellGeometry w = well_geometry(v0);
    double h = 1e-4;
    double d2 = (potential(w.z_plus + h, v0) - 2.0 * potential(w.z_plus, v0) +
                 potential(w.z_plus - h, v0)) /
                (h * h);
    CHECK(d2 == doctest::Approx(w.curvature).epsilon(1e-6));
    // minimum: first derivative vanishes
    double d1 = (potential(w.z_plus + h, v0) - potential(w.z_plus - h, v0)) / (2.0 * h);
    CHECK(std::abs(d1) < 1e-8 * v0);
  }
}

TEST_CASE("harmonic asymptote reference values and ladder spacing") {
  CHECK(harmonic_asymptote(1764.0, 0) == doctest::Approx(-238.4714290673570).epsilon(1e-12));
  CHECK(harmonic_asymptote(2809.0, 0) == doctest::Approx(-387.2986022887018).epsilon(1e-12));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> vdist(1.0, 4000.0);
  std::uniform_int_distribution<int> nudist(0, 10);
  for (int i = 0; i < 1000; ++i) {
    double v0 = vdist(rng);
    int nu = nudist(rng);
    double gap = harmonic_asymptote(v0, nu + 1) - harmonic_asymptote(v0, nu);
    CHECK(gap == doctest::Approx(4.0 * std::sqrt(2.0 * v0 / 27.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(harmonic_asymptote(10.0, -1), std::invalid_argument);
}

TEST_CASE("dimensional conversion maps") {
  DimensionfulParams unit{0.5, 1.0, 1.0, 1.0};
  CHECK(to_dimensionless(unit) == 1.0);
  DimensionfulParams p{1.0, 2.0, 3.0, 1.0};
  CHECK(to_dimensionless(p) == 24.0);
  // round trip within an ulp
  double eps = -17.25;
  CHECK(energy_to_epsilon(epsilon_to_energy(eps, p), p) == doctest::Approx(eps).epsilon(1e-16));
  DimensionfulParams bad{1.0, -1.0, 1.0, 1.0};
  CHECK_THROWS_AS(to_dimensionless(bad), std::invalid_argument);
}

TEST_CASE("asymptote error shrinks relative to sqrt(v0) (oracle reference)") {
  auto eps0 = [](double v0) {
    OracleConfig oc;
    oc.k = 2;
    OracleResult r = fd_spectrum(v0, oc);
    REQUIRE(!r.states.empty());
    return r.states[0].epsilon;
  };
  double r400 = std::abs(eps0(400.0) - harmonic_asymptote(400.0, 0)) / std::sqrt(400.0);
  double r1600 = std::abs(eps0(1600.0) - harmonic_asymptote(1600.0, 0)) / std::sqrt(1600.0);
  CHECK(r1600 < r400);
}

TEST_CASE("Hellmann-Feynman slope equals the shape expectation") {
  ScanConfig cfg;
  auto rep = hellmann_feynman_check(57.8444102, 0, 0.0, cfg);
  CHECK(rep.lhs < 0.0);
  CHECK(rep.rhs < 0.0);
  CHECK(rep.rhs > -4.0 / 27.0);
  CHECK(rep.abs_diff <= 1e-4 * std::abs(rep.rhs));
  CHECK(rep.delta == doctest::Approx(1e-3 * 57.8444102));
  // state index beyond the spectrum is reported
  CHECK_THROWS_AS(hellmann_feynman_check(4.0, 5, 0.0, cfg), std::runtime_error);
}
