#include "hyperwell/exact_solutions.hpp"

#include <cmath>
#include <stdexcept>

#include "hyperwell/recurrence.hpp"

namespace hyperwell {

namespace {

long bound_offset(Parity parity, long n) { return 4 * n + 3 + 2 * static_cast<long>(parity); }

/// Rational alpha-values where the truncation-branch recurrence denominators
/// vanish: beta_n + j + 2 = 0 at alpha = 2j + 1 - 4n - 2*gamma, j = -1..n+1.
std::vector<long> recurrence_poles(Parity parity, long n) {
  std::vector<long> poles;
  for (long j = -1; j <= n + 1; ++j) poles.push_back(2 * j + 1 - 4 * n - 2 * static_cast<long>(parity));
  return poles;
}

}  // namespace

PhysicalWindow physical_window(Parity parity, long n) {
  double m = static_cast<double>(bound_offset(parity, n));
  double c = (27.0 + 12.0 * std::sqrt(3.0)) / 11.0;
  return {-c * m, -m};
}

IntPoly truncation_numerator(Parity parity, long n) {
  if (n < 0) throw std::invalid_argument("truncation_numerator: n must be >= 0");
  const int gamma = static_cast<int>(parity);
  RatFunc alpha = RatFunc::variable();
  RatFunc beta = beta_n_generic<RatFunc>(gamma, alpha, n);
  RatFunc c_prev(0L);  // c_{-1}
  RatFunc c_cur(1L);   // c_0
  for (long j = -1; j <= n - 1; ++j) {
    RatFunc a = coeff_A_generic<RatFunc>(gamma, alpha, beta, j);
    RatFunc b = coeff_B_generic<RatFunc>(gamma, alpha, beta, j);
    RatFunc next = a * c_cur + b * c_prev;
    c_prev = c_cur;
    c_cur = next;
  }
  if (c_cur.is_zero()) throw std::runtime_error("truncation_numerator: c_{n+1} vanished identically");
  return c_cur.num().monic_sign();
}

AlphaRootsReport alpha_roots(Parity parity, long n, double precision) {
  AlphaRootsReport rep;
  rep.parity = parity;
  rep.n = n;
  rep.numerator = truncation_numerator(parity, n);
  rep.defining = squarefree_part(rep.numerator);
  rep.degree = rep.numerator.degree();
  rep.roots = isolate_real_roots(rep.defining, Rat(precision));
  rep.real_count = static_cast<long>(rep.roots.size());
  return rep;
}

std::vector<bool> physical_mask(Parity parity, long n, const IntPoly& defining,
                                std::vector<IsolatedRoot>& roots) {
  long m = bound_offset(parity, n);
  // alpha + m < 0  and  11 alpha^2 + 54 m alpha + 27 m^2 < 0.
  IntPoly upper = IntPoly::from_longs({m, 1});
  IntPoly lower = IntPoly::from_longs({27 * m * m, 54 * m, 11});
  SturmChain chain(defining);
  std::vector<bool> mask;
  mask.reserve(roots.size());
  for (auto& r : roots) {
    int s_upper = sign_at_algebraic(upper, chain, r);
    int s_lower = (s_upper < 0) ? sign_at_algebraic(lower, chain, r) : 1;
    mask.push_back(s_upper < 0 && s_lower < 0);
  }
  return mask;
}

std::vector<IsolatedRoot> physical_filter(Parity parity, long n, const IntPoly& defining,
                                          const std::vector<IsolatedRoot>& roots) {
  std::vector<IsolatedRoot> work = roots;
  std::vector<bool> mask = physical_mask(parity, n, defining, work);
  std::vector<IsolatedRoot> out;
  for (size_t i = 0; i < work.size(); ++i)
    if (mask[i]) out.push_back(work[i]);
  return out;
}

PolynomialSolution assemble_polynomial_solution(Parity parity, long n, const IsolatedRoot& root_in,
                                                const IntPoly& defining) {
  const int gamma = static_cast<int>(parity);
  PolynomialSolution sol;
  sol.gamma = gamma;
  sol.n = n;
  sol.alpha = root_in;

  // Strip rational recurrence poles from the modulus so every denominator is
  // invertible in the quotient ring.
  IntPoly local = defining;
  for (long p : recurrence_poles(parity, n)) {
    IntPoly lin = IntPoly::from_longs({-p, 1});
    Rat pr(p);
    if (local.sign_at(pr) == 0) {
      bool inside = sol.alpha.exact ? (sol.alpha.lo == pr)
                                    : (sol.alpha.lo < pr && pr < sol.alpha.hi);
      if (inside)
        throw std::runtime_error("assemble_polynomial_solution: root coincides with a recurrence pole");
      local = divexact(local, lin);
    }
  }
  if (local.degree() < 1)
    throw std::runtime_error("assemble_polynomial_solution: modulus degenerated to a constant");

  auto ring = std::make_shared<QuotientRing>(local);
  RingElem alpha = RingElem::generator(ring);
  RingElem beta = beta_n_generic<RingElem>(gamma, alpha, n);

  std::vector<RingElem> c;
  c.reserve(n + 3);
  c.push_back(RingElem::make_long(ring, 1));  // c_0
  RingElem c_prev = RingElem::make_long(ring, 0);
  RingElem c_cur = c.front();
  for (long j = -1; j <= n; ++j) {
    RingElem a = coeff_A_generic<RingElem>(gamma, alpha, beta, j);
    RingElem b = coeff_B_generic<RingElem>(gamma, alpha, beta, j);
    RingElem next = a * c_cur + b * c_prev;
    c.push_back(next);
    c_prev = c_cur;
    c_cur = next;
  }
  // c now holds c_0..c_{n+2}.
  if (!c[n + 1].is_zero() || !c[n + 2].is_zero())
    throw std::runtime_error("assemble_polynomial_solution: truncation conditions do not vanish");

  sol.ring = ring;
  sol.coeffs_exact.reserve(n + 1);
  for (long j = 0; j <= n; ++j) sol.coeffs_exact.push_back(c[j].vec());

  SturmChain chain(defining);
  refine_root(chain, sol.alpha, Rat(1) / Rat(Int(1) << 120));
  auto [dec, digits] = decimal_string(chain, sol.alpha, 30);
  sol.alpha_decimal = dec;
  sol.certified_digits = digits;
  sol.alpha_f = sol.alpha.approx();
  sol.beta = beta_n(parity, sol.alpha_f, n);
  sol.epsilon = -sol.beta * sol.beta;

  sol.coeffs_float.reserve(n + 1);
  for (long j = 0; j <= n; ++j)
    sol.coeffs_float.push_back(ring->eval_double(sol.coeffs_exact[j], sol.alpha_f));

  return sol;
}

namespace {

/// y, y', y'' of the stored polynomial at rational xi, in the quotient ring.
struct RingSeries {
  RingElem y, dy, d2y;
};

RingSeries eval_series(const PolynomialSolution& sol, const Rat& xi) {
  auto ring = sol.ring;
  RingElem y = RingElem::make_long(ring, 0);
  RingElem dy = y, d2y = y;
  Rat xp(1);
  for (size_t j = 0; j < sol.coeffs_exact.size(); ++j) {
    RingElem cj(ring, sol.coeffs_exact[j]);
    y = y + cj.mul_rat(xp);
    if (j >= 1) {
      Rat xpm = xp / xi;  // xi^(j-1)
      dy = dy + cj.mul_rat(Rat(static_cast<long>(j)) * xpm);
      if (j >= 2) {
        Rat xpm2 = xpm / xi;
        d2y = d2y + cj.mul_rat(Rat(static_cast<long>(j * (j - 1))) * xpm2);
      }
    }
    xp *= xi;
  }
  return {y, dy, d2y};
}

}  // namespace

ResidualReport residual_check(const PolynomialSolution& sol, const std::vector<Rat>& points) {
  ResidualReport rep;
  rep.exact_zero = true;
  auto ring = sol.ring;
  const long g = sol.gamma;
  RingElem alpha = RingElem::generator(ring);
  RingElem beta = beta_n_generic<RingElem>(static_cast<int>(g), alpha, sol.n);

  for (const Rat& xi : points) {
    if (!(xi > 0 && xi < 1)) throw std::invalid_argument("residual_check: sample points must lie in (0,1)");
    RingSeries s = eval_series(sol, xi);
    Rat xim1 = xi - 1;
    // 4 xi^2 (1-xi) y''
    RingElem term2 = s.d2y.mul_rat(Rat(4) * xi * xi * (Rat(1) - xi));
    // -2 xi [2 alpha xi (xi-1) + 2 beta (xi-1) + 2 g xi + 3 xi - 2] y'
    RingElem bracket1 = alpha.mul_rat(Rat(2) * xi * xim1) + beta.mul_rat(Rat(2) * xim1) +
                        RingElem::make_long(ring, 1).mul_rat(Rat(2 * g) * xi + Rat(3) * xi - 2);
    RingElem term1 = (s.dy * bracket1).mul_rat(Rat(-2) * xi);
    // -xi [alpha^2 (xi-1) + alpha (2 beta (xi-1) + 2 g xi + 3 xi - 2)
    //      + beta^2 + beta (2g+1) + g(g+1)] y
    RingElem inner = beta.mul_rat(Rat(2) * xim1) +
                     RingElem::make_long(ring, 1).mul_rat(Rat(2 * g) * xi + Rat(3) * xi - 2);
    RingElem bracket0 = (alpha * alpha).mul_rat(xim1) + alpha * inner + beta * beta +
                        beta.mul_rat(Rat(2 * g + 1)) + RingElem::make_long(ring, g * (g + 1));
    RingElem term0 = (s.y * bracket0).mul_rat(-xi);
    RingElem res = term2 + term1 + term0;
    if (!res.is_zero()) {
      rep.exact_zero = false;
      double v = std::abs(res.eval_double(sol.alpha_f));
      rep.max_abs_float = std::max(rep.max_abs_float, v);
    }
  }
  return rep;
}

double residual_operator_double(int gamma, double alpha, double beta,
                                const std::vector<double>& coeffs, double xi) {
  double y = 0, dy = 0, d2y = 0;
  for (size_t j = coeffs.size(); j-- > 0;) {
    // Horner for y and its first two derivatives simultaneously.
    d2y = d2y * xi + 2 * dy;
    dy = dy * xi + y;
    y = y * xi + coeffs[j];
  }
  const double g = gamma;
  double term2 = 4 * xi * xi * (1 - xi) * d2y;
  double term1 =
      -2 * xi * (2 * alpha * xi * (xi - 1) + 2 * beta * (xi - 1) + 2 * g * xi + 3 * xi - 2) * dy;
  double term0 = -xi *
                 (alpha * alpha * (xi - 1) + alpha * (2 * beta * (xi - 1) + 2 * g * xi + 3 * xi - 2) +
                  beta * beta + beta * (2 * g + 1) + g * (g + 1)) *
                 y;
  return term2 + term1 + term0;
}

ExactEnumeration enumerate_exact(Parity parity, long n, double precision) {
  ExactEnumeration e;
  e.report = alpha_roots(parity, n, precision);
  e.window = physical_window(parity, n);
  std::vector<bool> mask = physical_mask(parity, n, e.report.defining, e.report.roots);
  int idx = 0;
  for (size_t i = 0; i < e.report.roots.size(); ++i) {
    if (mask[i]) {
      PolynomialSolution sol =
          assemble_polynomial_solution(parity, n, e.report.roots[i], e.report.defining);
      sol.index = ++idx;
      e.accepted.push_back(std::move(sol));
    } else {
      e.rejected.push_back(e.report.roots[i]);
    }
  }
  return e;
}

}  // namespace hyperwell
