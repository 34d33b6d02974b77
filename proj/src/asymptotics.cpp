#include "hyperwell/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hyperwell/wavefunction.hpp"

namespace hyperwell {

double shape_function(double z) {
  double t = std::tanh(z);
  double a = std::abs(z);
  // sech^2 via exponentials; exact at z=0, no overflow for large |z|.
  double e = std::exp(-2.0 * a);
  double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
  return t * t * t * t * sech2;
}

double potential(double z, double v0) {
  if (!(v0 > 0)) throw std::invalid_argument("potential: v0 must be positive");
  return -v0 * shape_function(z);
}

WellGeometry well_geometry(double v0) {
  if (!(v0 > 0)) throw std::invalid_argument("well_geometry: v0 must be positive");
  WellGeometry g;
  g.z_plus = std::log(std::sqrt(3.0) + std::sqrt(2.0));
  g.z_minus = -g.z_plus;
  g.depth = -4.0 * v0 / 27.0;
  g.curvature = 16.0 * v0 / 27.0;
  return g;
}

double harmonic_asymptote(double v0, int nu) {
  if (!(v0 > 0)) throw std::invalid_argument("harmonic_asymptote: v0 must be positive");
  if (nu < 0) throw std::invalid_argument("harmonic_asymptote: nu must be >= 0");
  return -4.0 * v0 / 27.0 + 2.0 * std::sqrt(2.0 * v0 / 27.0) * (2.0 * nu + 1.0);
}

double to_dimensionless(const DimensionfulParams& p) {
  if (!(p.mass > 0 && p.width > 0 && p.depth > 0 && p.hbar > 0))
    throw std::invalid_argument("to_dimensionless: all parameters must be positive");
  return 2.0 * p.mass * p.width * p.width * p.depth / (p.hbar * p.hbar);
}

double epsilon_to_energy(double epsilon, const DimensionfulParams& p) {
  return p.hbar * p.hbar * epsilon / (2.0 * p.mass * p.width * p.width);
}

double energy_to_epsilon(double energy, const DimensionfulParams& p) {
  return 2.0 * p.mass * p.width * p.width * energy / (p.hbar * p.hbar);
}

HellmannFeynmanReport hellmann_feynman_check(double v0, int nu, double delta,
                                             const ScanConfig& cfg) {
  if (!(v0 > 0)) throw std::invalid_argument("hellmann_feynman_check: v0 must be positive");
  if (delta <= 0) delta = 1e-3 * v0;
  HellmannFeynmanReport rep;
  rep.delta = delta;

  auto eps_at = [&](double v) -> double {
    SpectrumResult res = spectrum(v, cfg);
    if (static_cast<int>(res.states.size()) <= nu)
      throw std::runtime_error("hellmann_feynman_check: state disappeared inside the difference window");
    return res.states[nu].epsilon;
  };
  double e_plus = eps_at(v0 + delta);
  double e_minus = eps_at(v0 - delta);
  rep.lhs = (e_plus - e_minus) / (2.0 * delta);

  SpectrumResult center = spectrum(v0, cfg);
  if (static_cast<int>(center.states.size()) <= nu)
    throw std::runtime_error("hellmann_feynman_check: state nu not present at v0");
  const Eigenvalue& st = center.states[nu];
  ModelContext ctx(st.parity, -std::sqrt(v0));
  std::vector<double> coeffs =
      numeric_series_coefficients(ctx, st.beta, st.N_final, cfg, nullptr);
  double L = default_half_width(st.beta);
  GridWavefunction w = normalize(sample_wavefunction(ctx.gamma(), ctx.alpha(), st.beta, coeffs,
                                                     WfSource::NumericSeries, L, 6001));
  rep.rhs = -shape_expectation(w);
  rep.abs_diff = std::abs(rep.lhs - rep.rhs);
  return rep;
}

}  // namespace hyperwell
