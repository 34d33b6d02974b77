#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hyperwell/model.hpp"

namespace hyperwell {

enum class WfSource { ExactPolynomial, NumericSeries, Oracle };

/// Real-space eigenfunction samples on a uniform symmetric grid [-L, L].
struct GridWavefunction {
  std::vector<double> z;
  std::vector<double> values;
  Parity parity = Parity::Even;
  double norm = 0;  // L2 norm estimate of the current samples
  WfSource source = WfSource::NumericSeries;
};

/// phi(z) from series coefficients in xi = 1/cosh^2(z):
/// phi = xi^(beta/2) * exp(alpha xi / 2) * y(xi) * tanh(z)^gamma.
/// (tanh(z)^gamma is the smooth odd extension of (1-xi)^(gamma/2) sign(z)^gamma.)
double evaluate_phi(int gamma, double alpha, double beta, std::span<const double> coeffs,
                    double z);

/// Spec default domain half-width.
double default_half_width(double beta_min);

/// Samples phi on a grid with `points` nodes (forced odd so z=0 is a node).
GridWavefunction sample_wavefunction(int gamma, double alpha, double beta,
                                     std::span<const double> coeffs, WfSource source, double L,
                                     int points);

/// Scales to unit L2 norm (composite Simpson).  Rejects zero-norm input.
GridWavefunction normalize(GridWavefunction w);

/// Strict sign changes in the interior above a noise floor of 1e-10 max|phi|.
int count_nodes(const GridWavefunction& w, std::vector<std::string>* warnings = nullptr);

/// <sinh^4/cosh^6> in the (normalized) state; lies in (0, 4/27).
double shape_expectation(const GridWavefunction& w);

/// CSV rows "z,phi".
void write_csv(const GridWavefunction& w, std::ostream& os);

}  // namespace hyperwell
