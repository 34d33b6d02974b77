#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperwell/intpoly.hpp"

namespace hyperwell {

/// The quotient ring Q[a]/(m) for a squarefree modulus m.  Elements are
/// represented by their remainder, a rational-coefficient polynomial of degree
/// < deg m.  Inverses exist exactly for elements coprime to m (which the
/// exact-solution assembly guarantees by stripping rational poles from m), so
/// the truncation-branch coefficients and ODE residuals can be evaluated with
/// no rounding at all: an element reduces to zero iff the represented value
/// vanishes at every root of m, in particular at the isolated root of
/// interest.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  explicit QuotientRing(IntPoly modulus);

  const IntPoly& modulus() const { return modulus_; }
  long degree() const { return modulus_.degree(); }

  using Vec = std::vector<Rat>;  // coefficient vector, constant first, size <= degree

  Vec reduce(Vec poly) const;  // remainder mod modulus
  Vec from_intpoly(const IntPoly& p) const;
  Vec zero() const { return {}; }
  Vec one() const { return {Rat(1)}; }
  Vec generator() const;

  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(Vec a) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec mul_rat(Vec a, const Rat& k) const;
  /// Multiplicative inverse via the extended Euclidean algorithm over Q[a];
  /// throws if gcd(a, m) is nonconstant.
  Vec inverse(const Vec& a) const;

  static bool is_zero(const Vec& a);
  double eval_double(const Vec& a, double alpha) const;
  std::string to_string(const Vec& a, const std::string& var = "a") const;

 private:
  IntPoly modulus_;
  std::vector<Rat> modulus_q_;  // rational mirror of the modulus coefficients
};

/// Value-semantics handle for ring elements so the generic recurrence
/// formulas (templated on the scalar) run unchanged in exact arithmetic.
class RingElem {
 public:
  RingElem() = default;
  RingElem(std::shared_ptr<const QuotientRing> ring, QuotientRing::Vec v)
      : ring_(std::move(ring)), v_(std::move(v)) {}

  static RingElem make_long(const std::shared_ptr<const QuotientRing>& ring, long v) {
    return RingElem(ring, v == 0 ? QuotientRing::Vec{} : QuotientRing::Vec{Rat(v)});
  }
  static RingElem generator(const std::shared_ptr<const QuotientRing>& ring) {
    return RingElem(ring, ring->generator());
  }

  const QuotientRing::Vec& vec() const { return v_; }
  const std::shared_ptr<const QuotientRing>& ring() const { return ring_; }
  bool is_zero() const { return QuotientRing::is_zero(v_); }
  double eval_double(double alpha) const { return ring_->eval_double(v_, alpha); }

  RingElem operator-() const { return RingElem(ring_, ring_->neg(v_)); }
  friend RingElem operator+(const RingElem& a, const RingElem& b) {
    return RingElem(a.pick(b), a.pick(b)->add(a.v_, b.v_));
  }
  friend RingElem operator-(const RingElem& a, const RingElem& b) {
    return RingElem(a.pick(b), a.pick(b)->sub(a.v_, b.v_));
  }
  friend RingElem operator*(const RingElem& a, const RingElem& b) {
    return RingElem(a.pick(b), a.pick(b)->mul(a.v_, b.v_));
  }
  friend RingElem operator/(const RingElem& a, const RingElem& b) {
    auto r = a.pick(b);
    return RingElem(r, r->mul(a.v_, r->inverse(b.v_)));
  }

  friend RingElem operator+(const RingElem& a, long b) { return a + a.scalar(b); }
  friend RingElem operator+(long a, const RingElem& b) { return b.scalar(a) + b; }
  friend RingElem operator-(const RingElem& a, long b) { return a - a.scalar(b); }
  friend RingElem operator-(long a, const RingElem& b) { return b.scalar(a) - b; }
  friend RingElem operator*(const RingElem& a, long b) { return a * a.scalar(b); }
  friend RingElem operator*(long a, const RingElem& b) { return b.scalar(a) * b; }
  friend RingElem operator/(const RingElem& a, long b) { return a / a.scalar(b); }
  friend RingElem operator/(long a, const RingElem& b) { return b.scalar(a) / b; }

  RingElem mul_rat(const Rat& k) const { return RingElem(ring_, ring_->mul_rat(v_, k)); }

 private:
  RingElem scalar(long v) const { return make_long(ring_, v); }
  const std::shared_ptr<const QuotientRing>& pick(const RingElem& other) const {
    return ring_ ? ring_ : other.ring_;
  }
  std::shared_ptr<const QuotientRing> ring_;
  QuotientRing::Vec v_;
};

}  // namespace hyperwell
