#include "hyperwell/intpoly.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace hyperwell {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(long v) {
  if (v == 0) return IntPoly();
  return IntPoly(std::vector<Int>{Int(v)});
}

IntPoly IntPoly::from_longs(const std::vector<long>& coeffs) {
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::variable() { return IntPoly(std::vector<Int>{Int(0), Int(1)}); }

const Int& IntPoly::coeff(size_t i) const {
  static const Int zero(0);
  return i < c_.size() ? c_[i] : zero;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::mul_int(const Int& k) const {
  if (k == 0) return IntPoly();
  IntPoly r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(c));
}

Int IntPoly::content() const {
  Int g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly();
  Int g = content();
  IntPoly r = *this;
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntPoly IntPoly::monic_sign() const {
  IntPoly r = primitive_part();
  if (!r.is_zero() && r.leading() < 0) r = -r;
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + Rat(c_[i]);
  }
  return acc;
}

int IntPoly::sign_at(const Rat& x) const {
  if (is_zero()) return 0;
  const Int& p = x.get_num();
  const Int& q = x.get_den();  // q > 0 canonical
  // sign(P(p/q)) = sign(sum a_i p^i q^(n-i))
  Int acc = c_.back();
  Int qpow(1);
  for (size_t i = c_.size() - 1; i-- > 0;) {
    qpow *= q;
    acc = acc * p + c_[i] * qpow;
  }
  return sgn(acc);
}

double IntPoly::eval_double(double x) const {
  double acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("pseudo_rem: zero divisor");
  IntPoly r = f;
  long dg = g.degree();
  const Int& lg = g.leading();
  while (!r.is_zero() && r.degree() >= dg) {
    long k = r.degree() - dg;
    Int lr = r.leading();
    // r <- lg*r - lr*x^k*g
    std::vector<Int> c(r.coeffs().size(), Int(0));
    for (size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i] * lg;
    for (long i = 0; i <= dg; ++i) c[i + k] -= g.coeff(i) * lr;
    r = IntPoly(std::move(c));
    assert(r.degree() < dg + k + 1);
  }
  return r;
}

IntPoly divexact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("divexact: zero divisor");
  if (f.is_zero()) return IntPoly();
  long df = f.degree(), dg = g.degree();
  if (df < dg) throw std::runtime_error("divexact: not divisible (degree)");
  std::vector<Int> rem(f.coeffs());
  std::vector<Int> q(df - dg + 1, Int(0));
  const Int& lg = g.leading();
  for (long k = df - dg; k >= 0; --k) {
    Int& lead = rem[k + dg];
    if (lead == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), lg.get_mpz_t()))
      throw std::runtime_error("divexact: not divisible (coefficient)");
    Int qk;
    mpz_divexact(qk.get_mpz_t(), lead.get_mpz_t(), lg.get_mpz_t());
    q[k] = qk;
    for (long i = 0; i <= dg; ++i) rem[k + i] -= qk * g.coeff(i);
  }
  for (const auto& v : rem)
    if (v != 0) throw std::runtime_error("divexact: nonzero remainder");
  return IntPoly(std::move(q));
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) return g.monic_sign();
  if (g.is_zero()) return f.monic_sign();
  IntPoly a = f.primitive_part();
  IntPoly b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.is_zero() ? IntPoly() : r.primitive_part();
  }
  return a.monic_sign();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) return IntPoly();
  IntPoly prim = p.primitive_part();
  if (prim.degree() == 0) return IntPoly::constant(1);
  IntPoly g = poly_gcd(prim, prim.derivative());
  if (g.degree() == 0) return prim.monic_sign();
  return divexact(prim, g).monic_sign();
}

SturmChain::SturmChain(IntPoly squarefree) {
  if (squarefree.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  seq_.push_back(std::move(squarefree));
  if (seq_[0].degree() == 0) return;
  seq_.push_back(seq_[0].derivative());
  while (seq_.back().degree() > 0) {
    const IntPoly& f = seq_[seq_.size() - 2];
    const IntPoly& g = seq_.back();
    IntPoly r = pseudo_rem(f, g);
    if (r.is_zero()) break;  // input was not squarefree; chain still usable for its squarefree part
    long delta = f.degree() - g.degree();
    bool mult_negative = (g.leading() < 0) && ((delta + 1) % 2 == 1);
    // Sturm step: next = -rem(f, g) up to a positive factor.  prem multiplied f
    // by lc(g)^(delta+1); flip so the net multiplier stays positive.
    IntPoly next = mult_negative ? r : -r;
    seq_.push_back(next.primitive_part());
  }
}

int SturmChain::variations_at(const Rat& x) const {
  int prev = 0, var = 0;
  for (const auto& p : seq_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_open(const Rat& a, const Rat& b) const {
  if (!(a < b)) throw std::invalid_argument("count_open: need a < b");
  if (seq_[0].sign_at(a) == 0 || seq_[0].sign_at(b) == 0)
    throw std::invalid_argument("count_open: endpoint is a root");
  return variations_at(a) - variations_at(b);
}

Rat SturmChain::cauchy_bound() const {
  const IntPoly& p = seq_[0];
  Int maxi(0);
  for (long i = 0; i < p.degree(); ++i) {
    Int a = abs(p.coeff(i));
    if (a > maxi) maxi = a;
  }
  Rat b = Rat(maxi) / Rat(abs(p.leading()));
  b += 2;  // strict margin
  return b;
}

long SturmChain::count_all_real() const {
  if (seq_[0].degree() == 0) return 0;
  Rat b = cauchy_bound();
  return count_open(-b, b);
}

double IsolatedRoot::approx() const {
  Rat mid = (lo + hi) / 2;
  return mid.get_d();
}

namespace {

struct Segment {
  Rat lo, hi;
  int vlo, vhi;
};

}  // namespace

void refine_root(const SturmChain& defining, IsolatedRoot& root, const Rat& width_target) {
  if (root.exact) return;
  const IntPoly& p = defining.poly();
  while (root.hi - root.lo > width_target) {
    Rat mid = (root.lo + root.hi) / 2;
    if (p.sign_at(mid) == 0) {
      root.lo = root.hi = mid;
      root.exact = true;
      return;
    }
    if (defining.count_open(root.lo, mid) == 1) {
      root.hi = mid;
    } else {
      root.lo = mid;
    }
  }
}

std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p_in, const Rat& width_target) {
  std::vector<IsolatedRoot> out;
  IntPoly p = squarefree_part(p_in);
  if (p.is_zero() || p.degree() == 0) return out;
  SturmChain chain(p);
  Rat bound = chain.cauchy_bound();
  std::deque<Segment> work;
  {
    Rat lo = -bound, hi = bound;
    work.push_back({lo, hi, chain.variations_at(lo), chain.variations_at(hi)});
  }
  while (!work.empty()) {
    Segment s = work.front();
    work.pop_front();
    int count = s.vlo - s.vhi;
    if (count <= 0) continue;
    if (count == 1) {
      IsolatedRoot r{s.lo, s.hi, false};
      refine_root(chain, r, width_target);
      out.push_back(std::move(r));
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    if (p.sign_at(mid) == 0) {
      // Exact rational root at mid; shave an epsilon-neighborhood that
      // contains no other root, then recurse on the two outer parts.
      Rat eps = (s.hi - s.lo) / 4;
      Rat a, b;
      int va, vb;
      while (true) {
        a = mid - eps;
        b = mid + eps;
        va = chain.variations_at(a);
        vb = chain.variations_at(b);
        if (p.sign_at(a) != 0 && p.sign_at(b) != 0 && va - vb == 1) break;
        eps /= 2;
      }
      out.push_back(IsolatedRoot{mid, mid, true});
      work.push_back({s.lo, a, s.vlo, va});
      work.push_back({b, s.hi, vb, s.vhi});
      continue;
    }
    int vmid = chain.variations_at(mid);
    work.push_back({s.lo, mid, s.vlo, vmid});
    work.push_back({mid, s.hi, vmid, s.vhi});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
  return out;
}

int sign_at_algebraic(const IntPoly& q, const SturmChain& defining, IsolatedRoot& root) {
  if (q.is_zero()) return 0;
  if (root.exact) return q.sign_at(root.lo);
  IntPoly g = poly_gcd(q, defining.poly());
  if (g.degree() >= 1) {
    SturmChain gs(squarefree_part(g));
    if (gs.poly().sign_at(root.lo) == 0 || gs.poly().sign_at(root.hi) == 0) {
      // Endpoint collision with a root of g: g's roots are roots of the
      // defining polynomial, and the endpoints are not roots of it.
      throw std::logic_error("sign_at_algebraic: inconsistent isolation");
    }
    if (gs.count_open(root.lo, root.hi) > 0) return 0;
  }
  IntPoly qsf = squarefree_part(q);
  SturmChain qs(qsf);
  for (int iter = 0; iter < 4096; ++iter) {
    if (qsf.sign_at(root.lo) != 0 && qsf.sign_at(root.hi) != 0 &&
        qs.count_open(root.lo, root.hi) == 0) {
      Rat mid = (root.lo + root.hi) / 2;
      int s = q.sign_at(mid);
      if (s != 0) return s;
    }
    Rat w = (root.hi - root.lo) / 2;
    refine_root(defining, root, w);
    if (root.exact) return q.sign_at(root.lo);
  }
  throw std::runtime_error("sign_at_algebraic: refinement did not separate roots");
}

std::pair<std::string, int> decimal_string(const SturmChain& defining, IsolatedRoot& root,
                                           int digits) {
  // Refine to width well below the last requested digit, then emit the longest
  // decimal prefix on which both endpoints agree.
  Rat w(1);
  for (int i = 0; i < digits + 2; ++i) w /= 10;
  refine_root(defining, root, w);
  Int ten(10);
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(digits));
  // Truncation toward zero so the emitted digits are a true prefix of the
  // decimal expansion for either sign.
  auto trunc_scaled = [&](const Rat& x) {
    Rat v = x * Rat(scale);
    Int f;
    mpz_tdiv_q(f.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return f;
  };
  int d = digits;
  Int flo = trunc_scaled(root.lo), fhi = trunc_scaled(root.hi);
  while (d > 0 && flo != fhi) {
    --d;
    Int t;
    mpz_tdiv_q_ui(t.get_mpz_t(), flo.get_mpz_t(), 10);
    flo = t;
    mpz_tdiv_q_ui(t.get_mpz_t(), fhi.get_mpz_t(), 10);
    fhi = t;
  }
  bool neg = flo < 0 || (flo == 0 && root.hi < 0);
  Int mag = abs(flo);
  std::string s = mag.get_str();
  while (static_cast<int>(s.size()) <= d) s.insert(s.begin(), '0');
  std::string out = (neg ? "-" : "");
  if (d == 0) {
    out += s;
  } else {
    out += s.substr(0, s.size() - d) + "." + s.substr(s.size() - d);
  }
  return {out, d};
}

}  // namespace hyperwell
