#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hyperwell {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial over the integers, constant term first.
/// All arithmetic is exact; this underpins the truncation branch (rational
/// function recurrence, certified real-root isolation, physicality filter).
class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly constant(long v);
  static IntPoly from_longs(const std::vector<long>& coeffs);
  /// The monomial x.
  static IntPoly variable();

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Int& leading() const { return c_.back(); }
  const Int& coeff(size_t i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly mul_int(const Int& k) const;
  IntPoly derivative() const;

  /// gcd of the coefficients (positive; 0 for the zero polynomial).
  Int content() const;
  /// Polynomial divided by its content; sign of the leading coefficient kept.
  IntPoly primitive_part() const;
  /// Primitive part with positive leading coefficient.
  IntPoly monic_sign() const;

  /// Exact value of P(x) for rational x.
  Rat eval(const Rat& x) const;
  /// Sign of P(x) without building the rational value (integer Horner on the
  /// homogenized form).
  int sign_at(const Rat& x) const;
  double eval_double(double x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Int> c_;
};

/// Pseudo-remainder: returns r with lc(g)^(deg f - deg g + 1) * f = q*g + r.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g);

/// Exact quotient f / g; throws if the division is not exact over Q.
IntPoly divexact(const IntPoly& f, const IntPoly& g);

/// Primitive gcd (positive leading coefficient) via the primitive PRS.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

/// P with repeated factors collapsed: P / gcd(P, P'), primitive, lc > 0.
IntPoly squarefree_part(const IntPoly& p);

/// Sturm chain of a squarefree polynomial; counts distinct real roots by sign
/// variations.  Evaluation points must not be roots of the polynomial.
class SturmChain {
 public:
  explicit SturmChain(IntPoly squarefree);
  const IntPoly& poly() const { return seq_.front(); }
  int variations_at(const Rat& x) const;
  /// Number of roots in the open interval (a, b); requires P(a) != 0, P(b) != 0.
  int count_open(const Rat& a, const Rat& b) const;
  long count_all_real() const;
  /// A strict bound: every real root lies in (-bound, bound).
  Rat cauchy_bound() const;

 private:
  std::vector<IntPoly> seq_;
};

/// An isolated real root of a squarefree polynomial: either an exact rational
/// value (lo == hi) or an open interval (lo, hi) containing exactly one root,
/// with nonzero polynomial values at both endpoints.
struct IsolatedRoot {
  Rat lo, hi;
  bool exact = false;
  double approx() const;
};

/// Isolates all real roots of p (any multiplicity collapses), refined until
/// interval width <= width_target.  Roots are returned in ascending order.
std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p, const Rat& width_target);

/// Shrinks the isolating interval of `root` (w.r.t. squarefree `defining`)
/// by repeated bisection until its width is <= width_target.
void refine_root(const SturmChain& defining, IsolatedRoot& root, const Rat& width_target);

/// Sign of Q at an algebraic number given by (defining, root).  Exact: returns
/// 0 iff the number is a common root of Q and defining.  May refine `root`.
int sign_at_algebraic(const IntPoly& q, const SturmChain& defining, IsolatedRoot& root);

/// Decimal string with `digits` certified fractional digits where possible
/// (falls back to fewer digits if the root hugs a decimal boundary).  Returns
/// the string and the number of certified fractional digits.
std::pair<std::string, int> decimal_string(const SturmChain& defining, IsolatedRoot& root,
                                           int digits);

}  // namespace hyperwell
