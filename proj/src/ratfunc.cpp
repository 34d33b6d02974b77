#include "hyperwell/ratfunc.hpp"

#include <stdexcept>

namespace hyperwell {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    return;
  }
  IntPoly g = poly_gcd(num_, den_);
  if (g.degree() >= 1) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
  Int cn = num_.content();
  Int cd = den_.content();
  Int k;
  mpz_gcd(k.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (k > 1) {
    IntPoly n2 = num_, d2 = den_;
    std::vector<Int> nc(n2.coeffs()), dc(d2.coeffs());
    for (auto& v : nc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
    for (auto& v : dc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
    num_ = IntPoly(std::move(nc));
    den_ = IntPoly(std::move(dc));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw std::domain_error("RatFunc: evaluation at a pole");
  return num_.eval(x) / d;
}

}  // namespace hyperwell
