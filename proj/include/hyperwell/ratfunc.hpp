#pragma once

#include "hyperwell/intpoly.hpp"

namespace hyperwell {

/// Rational function in one variable over Z, kept fully reduced:
/// gcd(num, den) is constant, the denominator is primitive with positive
/// leading coefficient, and zero is canonically 0/1.  Used to run the
/// three-term recurrence symbolically in alpha on the truncation branch.
class RatFunc {
 public:
  RatFunc() : num_(), den_(IntPoly::constant(1)) {}
  RatFunc(long v) : num_(IntPoly::constant(v)), den_(IntPoly::constant(1)) {}
  explicit RatFunc(IntPoly p) : num_(std::move(p)), den_(IntPoly::constant(1)) {}
  RatFunc(IntPoly num, IntPoly den);

  static RatFunc variable() { return RatFunc(IntPoly::variable()); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  friend RatFunc operator+(const RatFunc& a, long b) { return a + RatFunc(b); }
  friend RatFunc operator+(long a, const RatFunc& b) { return RatFunc(a) + b; }
  friend RatFunc operator-(const RatFunc& a, long b) { return a - RatFunc(b); }
  friend RatFunc operator-(long a, const RatFunc& b) { return RatFunc(a) - b; }
  friend RatFunc operator*(const RatFunc& a, long b) { return a * RatFunc(b); }
  friend RatFunc operator*(long a, const RatFunc& b) { return RatFunc(a) * b; }
  friend RatFunc operator/(const RatFunc& a, long b) { return a / RatFunc(b); }
  friend RatFunc operator/(long a, const RatFunc& b) { return RatFunc(a) / b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  double eval_double(double x) const { return num_.eval_double(x) / den_.eval_double(x); }
  Rat eval(const Rat& x) const;

 private:
  void reduce();
  IntPoly num_, den_;
};

}  // namespace hyperwell
