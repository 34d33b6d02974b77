#pragma once

#include "hyperwell/spectrum.hpp"

namespace hyperwell {

/// Physical parameters before dimensional reduction.  Only the combination
/// v0 = 2 m d^2 V0 / hbar^2 matters for the dimensionless problem.
struct DimensionfulParams {
  double mass = 1.0;
  double width = 1.0;   // d > 0
  double depth = 1.0;   // V0 > 0
  double hbar = 1.0;
};

struct WellGeometry {
  double z_plus = 0, z_minus = 0;  // minima, +-ln(sqrt(3)+sqrt(2))
  double depth = 0;                // v(z_+-) = -4 v0 / 27
  double curvature = 0;            // v''(z_+-) = 16 v0 / 27
  double taylor_quadratic() const { return curvature / 2.0; }
};

/// The dimensionless shape sinh^4(z)/cosh^6(z) = xi (1-xi)^2 with
/// xi = 1/cosh^2(z); bounded by 4/27 and overflow-free for any z.
double shape_function(double z);

/// v(z) = -v0 sinh^4(z)/cosh^6(z).
double potential(double z, double v0);

WellGeometry well_geometry(double v0);

/// Harmonic levels about either minimum: -4 v0/27 + 2 sqrt(2 v0/27) (2 nu + 1).
/// Valid for deep wells; exposed for all v0, the tests quantify the agreement.
double harmonic_asymptote(double v0, int nu);

double to_dimensionless(const DimensionfulParams& p);
double epsilon_to_energy(double epsilon, const DimensionfulParams& p);
double energy_to_epsilon(double energy, const DimensionfulParams& p);

struct HellmannFeynmanReport {
  double lhs = 0;       // central difference d eps_nu / d v0
  double rhs = 0;       // -<shape> in the normalized eigenstate at v0
  double abs_diff = 0;
  double delta = 0;     // step actually used
};

/// Consistency check of the eigenvalue slope against the shape expectation.
/// Throws if state nu does not exist across the whole difference window.
HellmannFeynmanReport hellmann_feynman_check(double v0, int nu, double delta,
                                             const ScanConfig& cfg);

}  // namespace hyperwell
