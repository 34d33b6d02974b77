#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperwell/algebraic.hpp"
#include "hyperwell/intpoly.hpp"
#include "hyperwell/model.hpp"
#include "hyperwell/ratfunc.hpp"

namespace hyperwell {

/// Open alpha-interval on which a degree-n truncation root is physically
/// acceptable, (-(27+12*sqrt(3))/11 * (4n+3+2*gamma), -(4n+3+2*gamma)).
/// Equivalent to 0 < beta_n(alpha) < 2|alpha|/sqrt(27).
struct PhysicalWindow {
  double lo, hi;
};

PhysicalWindow physical_window(Parity parity, long n);

/// Numerator of c_{n+1}(alpha) on the truncation branch beta = beta_n(alpha),
/// computed by running the recurrence in exact rational-function arithmetic
/// and clearing denominators.  Primitive with positive leading coefficient;
/// degree 2(n+1) is expected but reported rather than assumed.
IntPoly truncation_numerator(Parity parity, long n);

struct AlphaRootsReport {
  Parity parity;
  long n;
  IntPoly numerator;   // primitive truncation numerator
  IntPoly defining;    // its squarefree part (isolation reference)
  long degree;         // numerator degree
  long real_count;     // number of distinct real roots found
  std::vector<IsolatedRoot> roots;  // ascending
};

/// Isolates every real root of the truncation numerator to width <= precision.
AlphaRootsReport alpha_roots(Parity parity, long n, double precision = 1e-12);

/// Keeps the roots inside the open physical window.  The comparison is exact:
/// alpha < -(4n+3+2g) and 11 alpha^2 + 54 m alpha + 27 m^2 < 0 (m = 4n+3+2g),
/// decided by Sturm sign evaluation at the isolated root.
std::vector<IsolatedRoot> physical_filter(Parity parity, long n, const IntPoly& defining,
                                          const std::vector<IsolatedRoot>& roots);
std::vector<bool> physical_mask(Parity parity, long n, const IntPoly& defining,
                                std::vector<IsolatedRoot>& roots);

/// Exact polynomial bound state at an accepted truncation root.
/// coeffs_exact live in Q[a]/(modulus) where modulus is the squarefree
/// defining polynomial with rational poles of the recurrence stripped; every
/// stored quantity evaluates exactly at the isolated root.
struct PolynomialSolution {
  int gamma = 0;
  long n = 0;
  int index = 0;  // 1-based, ascending alpha among accepted roots
  std::shared_ptr<const QuotientRing> ring;
  IsolatedRoot alpha;
  std::string alpha_decimal;
  int certified_digits = 0;
  double alpha_f = 0, beta = 0, epsilon = 0;
  std::vector<QuotientRing::Vec> coeffs_exact;  // c_0..c_n
  std::vector<double> coeffs_float;
};

/// Builds the full record and proves c_{n+1} = c_{n+2} = 0 in the quotient
/// ring.  Throws if the root collides with a recurrence pole or the vanishing
/// check fails (both would signal an isolation bug, not a valid input).
PolynomialSolution assemble_polynomial_solution(Parity parity, long n, const IsolatedRoot& root,
                                                const IntPoly& defining);

struct ResidualReport {
  bool exact_zero = false;  // ODE residual is exactly zero at all sample points
  double max_abs_float = 0; // binary64 mirror of the worst sample
};

/// Evaluates the transformed ODE at rational sample points in (0,1) with
/// quotient-ring arithmetic; exact polynomial solutions give exactly zero.
ResidualReport residual_check(const PolynomialSolution& sol, const std::vector<Rat>& points);

/// Binary64 evaluation of the same differential operator (negative controls,
/// float mirrors).
double residual_operator_double(int gamma, double alpha, double beta,
                                const std::vector<double>& coeffs, double xi);

struct ExactEnumeration {
  AlphaRootsReport report;
  PhysicalWindow window;
  std::vector<PolynomialSolution> accepted;
  std::vector<IsolatedRoot> rejected;
};

/// One-call pipeline: roots, filter, assembly; accepted solutions are indexed
/// 1..k in ascending alpha.
ExactEnumeration enumerate_exact(Parity parity, long n, double precision = 1e-12);

}  // namespace hyperwell
