#include "hyperwell/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hyperwell/asymptotics.hpp"

namespace hyperwell {

namespace {

/// Number of eigenvalues of the tridiagonal (diag, offdiag b) below x, by the
/// classic LDL^T pivot sign count.
long neg_count(const std::vector<double>& diag, double b2, double x) {
  const double pivmin = 1e-300;
  long cnt = 0;
  double d = diag[0] - x;
  if (std::abs(d) < pivmin) d = -pivmin;
  if (d < 0) ++cnt;
  for (size_t i = 1; i < diag.size(); ++i) {
    d = (diag[i] - x) - b2 / d;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0) ++cnt;
  }
  return cnt;
}

/// Solves (T - lambda I) x = rhs with partial pivoting; T tridiagonal with
/// constant off-diagonal b.
std::vector<double> tridiag_solve(const std::vector<double>& diag, double b, double lambda,
                                  std::vector<double> rhs) {
  const size_t n = diag.size();
  std::vector<double> dl(n, b), d(n), du(n, b), du2(n, 0.0);
  for (size_t i = 0; i < n; ++i) d[i] = diag[i] - lambda;
  std::vector<int> piv(n, 0);
  // LU factorization with row swaps between adjacent rows.
  for (size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i + 1])) {
      double m = (d[i] != 0.0) ? dl[i + 1] / d[i] : 0.0;
      dl[i + 1] = m;
      d[i + 1] -= m * du[i];
      du2[i] = 0.0;
    } else {
      piv[i] = 1;
      double m = d[i] / dl[i + 1];
      d[i] = dl[i + 1];
      double tmp = d[i + 1];
      d[i + 1] = du[i] - m * tmp;
      du2[i] = (i + 2 < n) ? du[i + 1] : 0.0;
      du[i] = tmp;
      if (i + 2 < n) du[i + 1] = -m * du2[i];
      dl[i + 1] = m;
    }
  }
  // Forward substitution with the recorded swaps.
  for (size_t i = 0; i + 1 < n; ++i) {
    if (piv[i]) std::swap(rhs[i], rhs[i + 1]);
    rhs[i + 1] -= dl[i + 1] * rhs[i];
  }
  // Back substitution.
  const double tiny = 1e-290;
  auto safe = [&](double v) { return (std::abs(v) < tiny) ? (v < 0 ? -tiny : tiny) : v; };
  rhs[n - 1] /= safe(d[n - 1]);
  if (n >= 2) rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / safe(d[n - 2]);
  for (size_t i = n; i-- > 2;) {
    size_t j = i - 2;
    rhs[j] = (rhs[j] - du[j] * rhs[j + 1] - du2[j] * rhs[j + 2]) / safe(d[j]);
  }
  return rhs;
}

void normalize_inf(std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  if (m > 0)
    for (double& x : v) x /= m;
}

}  // namespace

OracleResult fd_spectrum(double v0, const OracleConfig& cfg) {
  if (!(v0 > 0)) throw std::invalid_argument("fd_spectrum: v0 must be positive");
  if (cfg.M < 3 || cfg.M % 2 == 0)
    throw std::invalid_argument("fd_spectrum: M must be odd and >= 3 (z=0 must be a grid node)");
  if (cfg.k < 1) throw std::invalid_argument("fd_spectrum: k must be >= 1");

  OracleResult out;
  const double h = cfg.h();
  out.h = h;
  const long M = cfg.M;
  const double b = -1.0 / (h * h);
  const double b2 = b * b;

  if (potential(cfg.L, v0) < -1e-6 * (4.0 * v0 / 27.0)) {
    out.warnings.push_back("potential is not negligible at the walls; increase L");
  }

  std::vector<double> diag(M);
  for (long i = 0; i < M; ++i) {
    double z = -cfg.L + (i + 1) * h;
    diag[i] = 2.0 / (h * h) + potential(z, v0);
  }

  double dmin = diag[0], dmax = diag[0];
  for (double v : diag) {
    dmin = std::min(dmin, v);
    dmax = std::max(dmax, v);
  }
  double glo = dmin - 2.0 * std::abs(b), ghi = dmax + 2.0 * std::abs(b);

  long n_negative = neg_count(diag, b2, 0.0);
  int want = static_cast<int>(std::min<long>(cfg.k, n_negative));

  std::vector<double> prev_vec;
  double prev_lambda = 0;
  for (int idx = 0; idx < want; ++idx) {
    double lo = glo, hi = std::min(0.0, ghi);
    while (hi - lo > 1e-13 * (std::abs(lo) + std::abs(hi) + 1.0)) {
      double mid = 0.5 * (lo + hi);
      if (neg_count(diag, b2, mid) >= idx + 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    double lambda = 0.5 * (lo + hi);

    // Inverse iteration with a deterministic pseudo-random start.
    std::vector<double> v(M);
    unsigned long state = 0x9e3779b97f4a7c15ull + static_cast<unsigned long>(idx);
    for (long i = 0; i < M; ++i) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      v[i] = static_cast<double>((state >> 11) & 0xfffffff) / double(0xfffffff) - 0.5;
    }
    double shift = lambda + 1e-11 * (std::abs(lambda) + 1.0);
    bool near_degenerate =
        idx > 0 && std::abs(lambda - prev_lambda) < 1e-7 * (std::abs(lambda) + 1.0);
    auto orthogonalize = [&](std::vector<double>& x) {
      if (!near_degenerate || prev_vec.empty()) return;
      double dot = 0, nrm = 0;
      for (long i = 0; i < M; ++i) {
        dot += x[i] * prev_vec[i];
        nrm += prev_vec[i] * prev_vec[i];
      }
      double c = dot / nrm;
      for (long i = 0; i < M; ++i) x[i] -= c * prev_vec[i];
    };
    for (int it = 0; it < 3; ++it) {
      v = tridiag_solve(diag, b, shift, std::move(v));
      orthogonalize(v);
      normalize_inf(v);
    }

    OracleState st;
    st.epsilon = lambda;

    // Parity from the mirror symmetry of the eigenvector (grid symmetric).
    // For a pair split below the solver resolution, inverse iteration alone
    // returns a mixture; deflating against the previous member restores it.
    double even_err = 0, odd_err = 0, peak = 0;
    for (long i = 0; i < M; ++i) {
      double vm = v[M - 1 - i];
      even_err = std::max(even_err, std::abs(v[i] - vm));
      odd_err = std::max(odd_err, std::abs(v[i] + vm));
      peak = std::max(peak, std::abs(v[i]));
    }
    st.parity = (even_err <= odd_err) ? 0 : 1;
    if (std::min(even_err, odd_err) > 1e-6 * peak) {
      // Project onto the cleaner symmetry class before judging.
      std::vector<double> proj(M);
      double perr = std::min(even_err, odd_err);
      for (long i = 0; i < M; ++i) {
        double vm = v[M - 1 - i];
        proj[i] = st.parity == 0 ? 0.5 * (v[i] + vm) : 0.5 * (v[i] - vm);
      }
      v = std::move(proj);
      normalize_inf(v);
      std::ostringstream os;
      os << "eigenvector " << idx << " required symmetry projection (asymmetry " << perr / peak
         << "); near-degenerate pair";
      out.warnings.push_back(os.str());
      peak = 1.0;
    }

    double floor = 1e-8 * peak;
    int nodes = 0, last_sign = 0;
    for (long i = 0; i < M; ++i) {
      if (std::abs(v[i]) <= floor) continue;
      int s = v[i] > 0 ? 1 : -1;
      if (last_sign != 0 && s != last_sign) ++nodes;
      last_sign = s;
    }
    st.nodes = nodes;

    st.boundary_amp = std::max(std::abs(v.front()), std::abs(v.back())) / peak;
    if (st.boundary_amp > 1e-8) {
      std::ostringstream os;
      os << "boundary contamination for eigenvalue " << idx << " (amp " << st.boundary_amp
         << "); increase L";
      out.warnings.push_back(os.str());
    }

    // Global sign convention: positive just right of the origin.
    long mid = (M - 1) / 2;
    double probe = 0;
    for (long i = mid; i < M; ++i) {
      if (std::abs(v[i]) > 1e-3 * peak) {
        probe = v[i];
        break;
      }
    }
    if (probe < 0)
      for (double& x : v) x = -x;

    prev_vec = v;
    prev_lambda = lambda;
    st.eigenvector = std::move(v);
    out.states.push_back(st);
  }
  return out;
}

}  // namespace hyperwell
