#include "hyperwell/algebraic.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperwell {

namespace {

using Vec = QuotientRing::Vec;

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

long deg(const Vec& v) { return static_cast<long>(v.size()) - 1; }

Vec sub_scaled_shifted(Vec a, const Vec& b, const Rat& k, long shift) {
  // a - k * x^shift * b
  if (deg(b) + shift > deg(a)) a.resize(b.size() + shift, Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= k * b[i];
  trim(a);
  return a;
}

/// Remainder of a modulo b over Q[x].
Vec poly_mod(Vec a, const Vec& b) {
  trim(a);
  long db = deg(b);
  if (db < 0) throw std::invalid_argument("poly_mod: zero modulus");
  while (deg(a) >= db) {
    Rat k = a.back() / b.back();
    a = sub_scaled_shifted(std::move(a), b, k, deg(a) - db);
  }
  return a;
}

Vec poly_mul(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

Vec poly_sub(Vec a, const Vec& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

QuotientRing::QuotientRing(IntPoly modulus) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1) throw std::invalid_argument("QuotientRing: modulus must be nonconstant");
  modulus_q_.reserve(modulus_.coeffs().size());
  for (const auto& c : modulus_.coeffs()) modulus_q_.emplace_back(c);
}

Vec QuotientRing::reduce(Vec poly) const { return poly_mod(std::move(poly), modulus_q_); }

Vec QuotientRing::from_intpoly(const IntPoly& p) const {
  Vec v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return reduce(std::move(v));
}

Vec QuotientRing::generator() const {
  Vec x{Rat(0), Rat(1)};
  return reduce(std::move(x));
}

Vec QuotientRing::add(const Vec& a, const Vec& b) const {
  Vec c = a;
  if (b.size() > c.size()) c.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  trim(c);
  return c;
}

Vec QuotientRing::sub(const Vec& a, const Vec& b) const { return poly_sub(a, b); }

Vec QuotientRing::neg(Vec a) const {
  for (auto& v : a) v = -v;
  return a;
}

Vec QuotientRing::mul(const Vec& a, const Vec& b) const { return reduce(poly_mul(a, b)); }

Vec QuotientRing::mul_rat(Vec a, const Rat& k) const {
  if (k == 0) return {};
  for (auto& v : a) v *= k;
  return a;
}

Vec QuotientRing::inverse(const Vec& a) const {
  if (a.empty()) throw std::domain_error("QuotientRing: inverse of zero");
  // Extended Euclid on (a, m): maintain r = u*a (mod m); when r becomes a
  // nonzero constant, u/r is the inverse.
  Vec r0 = modulus_q_, r1 = a;
  Vec u0 = {}, u1 = {Rat(1)};
  trim(r1);
  while (true) {
    if (deg(r1) < 0) throw std::domain_error("QuotientRing: element not invertible (shares a factor with the modulus)");
    if (deg(r1) == 0) {
      Rat inv = Rat(1) / r1[0];
      Vec res = u1;
      for (auto& v : res) v *= inv;
      return reduce(std::move(res));
    }
    // r0 = q*r1 + r2
    Vec q;
    Vec r2 = r0;
    long d1 = deg(r1);
    while (deg(r2) >= d1) {
      long shift = deg(r2) - d1;
      Rat k = r2.back() / r1.back();
      if (static_cast<long>(q.size()) <= shift) q.resize(shift + 1, Rat(0));
      q[shift] += k;
      r2 = sub_scaled_shifted(std::move(r2), r1, k, shift);
    }
    Vec u2 = poly_sub(u0, poly_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
}

bool QuotientRing::is_zero(const Vec& a) {
  for (const auto& v : a)
    if (v != 0) return false;
  return true;
}

double QuotientRing::eval_double(const Vec& a, double alpha) const {
  double acc = 0.0;
  for (size_t i = a.size(); i-- > 0;) acc = acc * alpha + a[i].get_d();
  return acc;
}

std::string QuotientRing::to_string(const Vec& a, const std::string& var) const {
  if (is_zero(a)) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    os << a[i].get_str();
    if (i >= 1) {
      os << "*" << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hyperwell
