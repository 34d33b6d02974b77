#pragma once

#include <string>
#include <vector>

namespace hyperwell {

/// Validation-grade finite-difference eigensolver.  Discretizes
/// -phi'' + v(z) phi = eps phi on [-L, L] with Dirichlet walls and second-order
/// central differences, then extracts the lowest eigenvalues of the symmetric
/// tridiagonal matrix by Sturm-count bisection and inverse iteration.
/// Deliberately has no code path in common with the recurrence branch.
struct OracleConfig {
  double L = 12.0;  // domain half-width
  long M = 4001;    // interior grid points; must be odd so z=0 is a node
  int k = 10;       // eigenvalues requested (only eps < 0 are returned)
  double h() const { return 2.0 * L / static_cast<double>(M + 1); }
};

struct OracleState {
  double epsilon = 0;
  int parity = 0;  // 0 even, 1 odd (from eigenvector symmetry)
  int nodes = 0;
  double boundary_amp = 0;  // max |eigenvector| at the walls / max |eigenvector|
  std::vector<double> eigenvector;  // interior nodes, unit max norm, phi(0+) > 0
};

struct OracleResult {
  std::vector<OracleState> states;  // ascending epsilon, all < 0
  std::vector<std::string> warnings;
  double h = 0;
};

OracleResult fd_spectrum(double v0, const OracleConfig& cfg);

}  // namespace hyperwell
