#include "hyperwell/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyperwell {

std::vector<long> ScanConfig::schedule_to(long n_max, long start, long step) {
  std::vector<long> s;
  for (long n = start; n < n_max; n += step) s.push_back(n);
  s.push_back(n_max);
  return s;
}

std::string to_string(ChainStatus s) {
  switch (s) {
    case ChainStatus::Converged: return "converged";
    case ChainStatus::Unconverged: return "unconverged";
    case ChainStatus::Spurious: return "spurious";
  }
  return "?";
}

namespace {

void validate_config(const ScanConfig& cfg) {
  if (cfg.N_schedule.empty()) throw std::invalid_argument("ScanConfig: empty N schedule");
  for (size_t i = 0; i < cfg.N_schedule.size(); ++i) {
    if (cfg.N_schedule[i] < 1 || (i > 0 && cfg.N_schedule[i] <= cfg.N_schedule[i - 1]))
      throw std::invalid_argument("ScanConfig: N schedule must be strictly increasing and >= 1");
  }
  if (!(cfg.root_tol > 0) || !(cfg.conv_tol > 0))
    throw std::invalid_argument("ScanConfig: tolerances must be positive");
  if (cfg.grid_points < 8) throw std::invalid_argument("ScanConfig: grid too coarse");
  if (cfg.backend == Backend::MultiPrec && cfg.precision_bits < 24)
    throw std::invalid_argument("ScanConfig: precision_bits must be at least 24");
}

/// c_N sign/magnitude without materializing the whole sequence.
template <class S>
SignValue cN_fast(int gamma, const S& alpha, const S& beta, long N) {
  constexpr long B = ScaledCoefficientSequence<S>::kRescaleLog2;
  S m_prev = scalar_from<S>(0.0, 64);
  long e_prev = 0;
  S m_cur = scalar_from<S>(1.0, 64);
  long e_cur = 0;
  for (long j = -1; j <= N - 2; ++j) {
    S a = coeff_A_generic(gamma, alpha, beta, j);
    S b = coeff_B_generic(gamma, alpha, beta, j);
    long eref = std::max(e_cur, e_prev);
    S v = a * scalar_ldexp2(m_cur, B * (e_cur - eref)) +
          b * scalar_ldexp2(m_prev, B * (e_prev - eref));
    long ev = eref;
    if (!scalar_finite(v)) throw std::runtime_error("c_N scan: non-finite coefficient");
    detail::normalize_scaled(v, ev);
    m_prev = std::move(m_cur);
    e_prev = e_cur;
    m_cur = std::move(v);
    e_cur = ev;
  }
  SignValue sv;
  sv.sign = scalar_sign(m_cur);
  if (sv.sign != 0) {
    sv.log_magnitude =
        (scalar_log2_abs(m_cur) + static_cast<double>(e_cur) * B) * std::numbers::ln2_v<double>;
  }
  return sv;
}

template <class S, class F>
double bisect_root(F&& f, S a, S b, int sa, double tol) {
  for (int iter = 0; iter < 400; ++iter) {
    S mid = (a + b) / 2L;
    if (scalar_to_double(b - a) <= tol) return scalar_to_double(mid);
    int sm = f(mid).sign;
    if (sm == 0) return scalar_to_double(mid);
    if (sm == sa) {
      a = std::move(mid);
    } else {
      b = std::move(mid);
    }
  }
  return scalar_to_double((a + b) / 2L);
}

/// Sign-change scan over [lo, hi]; roots strictly inside the open interval.
/// Cells where |c_N| dips sharply without a sign change are re-scanned at
/// finer resolution to catch close root pairs.
template <class S, class F>
std::vector<double> scan_roots(F&& f, const S& lo, const S& hi, int grid, double root_tol,
                               std::vector<std::string>* warnings) {
  const double kDipLog = std::log(1e3);
  std::vector<S> xs;
  xs.reserve(grid + 2);
  std::vector<int> sgn(grid + 2);
  std::vector<double> mag(grid + 2);
  S span = hi - lo;
  for (int i = 0; i <= grid + 1; ++i) {
    S x = lo + (span * static_cast<long>(i)) / static_cast<long>(grid + 1);
    SignValue sv = f(x);
    xs.push_back(std::move(x));
    sgn[i] = sv.sign;
    mag[i] = sv.log_magnitude;
  }
  std::vector<double> roots;
  auto emit = [&](double r) {
    double l = scalar_to_double(lo), h = scalar_to_double(hi);
    if (r > l + root_tol && r < h - root_tol) roots.push_back(r);
  };
  for (int i = 0; i <= grid + 1; ++i) {
    if (sgn[i] == 0) {
      emit(scalar_to_double(xs[i]));
      continue;
    }
    if (i <= grid && sgn[i + 1] != 0 && sgn[i] != sgn[i + 1]) {
      emit(bisect_root(f, xs[i], xs[i + 1], sgn[i], root_tol));
    }
  }
  // Dip refinement: a deep magnitude minimum without a sign change can hide a
  // near-tangent root pair inside one cell.
  for (int i = 1; i <= grid; ++i) {
    if (sgn[i] == 0 || sgn[i - 1] == 0 || sgn[i + 1] == 0) continue;
    if (sgn[i - 1] != sgn[i] || sgn[i] != sgn[i + 1]) continue;
    if (!(mag[i - 1] - mag[i] > kDipLog && mag[i + 1] - mag[i] > kDipLog)) continue;
    const int sub = 64;
    S a = xs[i - 1];
    S step = (xs[i + 1] - xs[i - 1]) / static_cast<long>(sub);
    int sprev = sgn[i - 1];
    S xprev = a;
    bool found = false;
    for (int k = 1; k <= sub; ++k) {
      S x = a + step * static_cast<long>(k);
      int s = f(x).sign;
      if (s == 0) {
        emit(scalar_to_double(x));
        found = true;
      } else if (s != sprev) {
        emit(bisect_root(f, xprev, x, sprev, root_tol));
        found = true;
      }
      xprev = std::move(x);
      if (s != 0) sprev = s;
    }
    if (found && warnings) {
      std::ostringstream os;
      os << "close root pair resolved by local refinement near x=" << scalar_to_double(xs[i]);
      warnings->push_back(os.str());
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [&](double a, double b) { return std::abs(a - b) <= root_tol * 4; }),
              roots.end());
  double spacing = scalar_to_double(span) / (grid + 1);
  for (size_t i = 1; i < roots.size(); ++i) {
    if (roots[i] - roots[i - 1] < spacing && warnings) {
      std::ostringstream os;
      os << "roots " << roots[i - 1] << " and " << roots[i]
         << " are closer than the grid spacing; scan may miss siblings";
      warnings->push_back(os.str());
    }
  }
  return roots;
}

template <class S>
std::vector<double> beta_roots_impl(const ModelContext& ctx, long N, const ScanConfig& cfg,
                                    std::vector<std::string>* warnings) {
  const unsigned bits = cfg.precision_bits;
  S alpha = scalar_from<S>(ctx.alpha(), bits);
  S beta_hi = (scalar_abs(alpha) * 2L) / scalar_sqrt(scalar_from<S>(27.0, bits));
  S beta_lo = scalar_from<S>(0.0, bits);
  if (std::isfinite(cfg.beta_window_lo)) {
    S w = scalar_from<S>(cfg.beta_window_lo, bits);
    if (beta_lo < w) beta_lo = w;
  }
  if (std::isfinite(cfg.beta_window_hi)) {
    S w = scalar_from<S>(cfg.beta_window_hi, bits);
    if (w < beta_hi) beta_hi = w;
  }
  auto f = [&](const S& b) { return cN_fast(ctx.gamma(), alpha, b, N); };
  return scan_roots(f, beta_lo, beta_hi, cfg.grid_points, cfg.root_tol, warnings);
}

struct ChainPoint {
  long N;
  double x;
};

struct Chain {
  std::vector<ChainPoint> pts;
  bool alive = true;
};

std::vector<Chain> track_chains(const std::vector<std::pair<long, std::vector<double>>>& per_order,
                                double radius) {
  std::vector<Chain> chains;
  for (const auto& [N, roots] : per_order) {
    struct Cand {
      double d;
      size_t chain, root;
    };
    std::vector<Cand> cands;
    for (size_t ci = 0; ci < chains.size(); ++ci) {
      if (!chains[ci].alive) continue;
      double last = chains[ci].pts.back().x;
      for (size_t ri = 0; ri < roots.size(); ++ri) {
        double d = std::abs(roots[ri] - last);
        if (d <= radius) cands.push_back({d, ci, ri});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.d < b.d; });
    std::vector<bool> chain_used(chains.size(), false), root_used(roots.size(), false);
    for (const Cand& c : cands) {
      if (chain_used[c.chain] || root_used[c.root]) continue;
      chain_used[c.chain] = true;
      root_used[c.root] = true;
      chains[c.chain].pts.push_back({N, roots[c.root]});
    }
    for (size_t ci = 0; ci < chains.size(); ++ci) {
      if (chains[ci].alive && !chain_used[ci]) chains[ci].alive = false;
    }
    for (size_t ri = 0; ri < roots.size(); ++ri) {
      if (!root_used[ri]) chains.push_back(Chain{{{N, roots[ri]}}, true});
    }
  }
  return chains;
}

struct ChainVerdict {
  double x = 0;
  long N_final = 0;
  double drift = std::numeric_limits<double>::infinity();
  ChainStatus status = ChainStatus::Spurious;
  size_t n_points = 0;
};

ChainVerdict judge_chain(const Chain& ch, long last_N, double conv_tol) {
  ChainVerdict v;
  v.x = ch.pts.back().x;
  v.N_final = ch.pts.back().N;
  v.n_points = ch.pts.size();
  size_t n = ch.pts.size();
  if (n >= 2) v.drift = std::abs(ch.pts[n - 1].x - ch.pts[n - 2].x);
  if (!ch.alive || v.N_final != last_N) {
    v.status = ChainStatus::Spurious;
    return v;
  }
  if (n >= 4) {
    bool ok = true;
    for (size_t k = n - 3; k < n; ++k)
      ok = ok && std::abs(ch.pts[k].x - ch.pts[k - 1].x) <= conv_tol;
    v.status = ok ? ChainStatus::Converged : ChainStatus::Unconverged;
  } else {
    v.status = ChainStatus::Unconverged;
  }
  return v;
}

}  // namespace

std::vector<double> beta_roots_at_order(const ModelContext& ctx, long N, const ScanConfig& cfg,
                                        std::vector<std::string>* warnings) {
  if (!(ctx.v0() > 0)) throw std::invalid_argument("beta_roots_at_order: v0 must be positive");
  validate_config(cfg);
  if (cfg.backend == Backend::Float64) return beta_roots_impl<double>(ctx, N, cfg, warnings);
  return beta_roots_impl<MpFloat>(ctx, N, cfg, warnings);
}

std::vector<Eigenvalue> eigenvalues(const ModelContext& ctx, const ScanConfig& cfg,
                                    SpectrumDiagnostics* diag) {
  validate_config(cfg);
  std::vector<std::pair<long, std::vector<double>>> per_order;
  std::vector<std::string> warnings;
  for (long N : cfg.N_schedule) per_order.emplace_back(N, beta_roots_at_order(ctx, N, cfg, &warnings));
  double spacing = ctx.beta_max() / (cfg.grid_points + 1);
  std::vector<Chain> chains = track_chains(per_order, 10.0 * spacing);
  long last_N = cfg.N_schedule.back();

  std::vector<Eigenvalue> out;
  for (const Chain& ch : chains) {
    ChainVerdict v = judge_chain(ch, last_N, cfg.conv_tol);
    Eigenvalue ev;
    ev.parity = ctx.parity();
    ev.beta = v.x;
    ev.epsilon = -v.x * v.x;
    ev.N_final = v.N_final;
    ev.drift = v.drift;
    ev.status = v.status;
    if (v.status == ChainStatus::Converged) {
      out.push_back(ev);
    } else if (diag) {
      diag->rejected.push_back(ev);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return a.epsilon < b.epsilon; });
  if (diag) {
    for (auto& w : warnings) diag->warnings.push_back(w);
  }
  return out;
}

SpectrumResult spectrum(double v0, const ScanConfig& cfg) {
  if (!(v0 > 0)) throw std::invalid_argument("spectrum: v0 must be positive");
  SpectrumResult res;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    ModelContext ctx(p, -std::sqrt(v0));
    auto evs = eigenvalues(ctx, cfg, &res.diagnostics);
    res.states.insert(res.states.end(), evs.begin(), evs.end());
  }
  std::sort(res.states.begin(), res.states.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return a.epsilon < b.epsilon; });
  for (size_t i = 0; i < res.states.size(); ++i) {
    res.states[i].nu = static_cast<int>(i);
    Parity expect = (i % 2 == 0) ? Parity::Even : Parity::Odd;
    if (res.states[i].parity != expect) {
      res.diagnostics.parity_alternation_ok = false;
    }
  }
  if (!res.diagnostics.parity_alternation_ok) {
    res.diagnostics.warnings.push_back(
        "parity alternation violated: a root chain is probably missing or spurious");
  }
  return res;
}

std::vector<CriticalValue> critical_alpha(Parity parity, const std::vector<int>& K_list,
                                          const ScanConfig& cfg,
                                          std::vector<std::string>* warnings) {
  if (K_list.empty()) throw std::invalid_argument("critical_alpha: empty K list");
  validate_config(cfg);
  int gamma = static_cast<int>(parity);
  int k_max = 0;
  for (int k : K_list) {
    if (k < 1) throw std::invalid_argument("critical_alpha: K must be >= 1");
    if (k % 2 != gamma % 2)
      throw std::invalid_argument("critical_alpha: K parity must match the sector (even K <-> even, odd K <-> odd)");
    k_max = std::max(k_max, k);
  }
  if (cfg.backend == Backend::Float64 && k_max >= 6 && warnings) {
    warnings->push_back("K >= 6 converges slowly in binary64; the multiprecision backend is recommended");
  }

  const double a_lo = -(4.0 * k_max + 8.0), a_hi = -0.5;
  std::vector<std::pair<long, std::vector<double>>> per_order;
  auto scan_at = [&](long N) {
    if (cfg.backend == Backend::Float64) {
      double alpha_lo = a_lo, alpha_hi = a_hi;
      auto f = [&](const double& a) { return cN_fast<double>(gamma, a, 0.0, N); };
      return scan_roots(f, alpha_lo, alpha_hi, cfg.grid_points, cfg.root_tol, warnings);
    }
    MpFloat lo(a_lo, cfg.precision_bits), hi(a_hi, cfg.precision_bits);
    MpFloat zero(0.0, cfg.precision_bits);
    auto f = [&](const MpFloat& a) { return cN_fast<MpFloat>(gamma, a, zero, N); };
    return scan_roots(f, lo, hi, cfg.grid_points, cfg.root_tol, warnings);
  };
  for (long N : cfg.N_schedule) per_order.emplace_back(N, scan_at(N));

  double spacing = (a_hi - a_lo) / (cfg.grid_points + 1);
  std::vector<Chain> chains = track_chains(per_order, 10.0 * spacing);
  long last_N = cfg.N_schedule.back();

  std::vector<ChainVerdict> alive;
  for (const Chain& ch : chains) {
    ChainVerdict v = judge_chain(ch, last_N, cfg.conv_tol);
    if (v.status != ChainStatus::Spurious) alive.push_back(v);
  }
  // |alpha| ascending = alpha descending; rank within the sector fixes K.
  std::sort(alive.begin(), alive.end(),
            [](const ChainVerdict& a, const ChainVerdict& b) { return a.x > b.x; });
  std::vector<CriticalValue> out;
  for (size_t rank = 0; rank < alive.size(); ++rank) {
    int K = (gamma == 0) ? static_cast<int>(2 * (rank + 1)) : static_cast<int>(2 * rank + 1);
    if (std::find(K_list.begin(), K_list.end(), K) == K_list.end()) continue;
    CriticalValue cv;
    cv.K = K;
    cv.parity = parity;
    cv.alpha = alive[rank].x;
    cv.v0 = alive[rank].x * alive[rank].x;
    cv.N_final = alive[rank].N_final;
    cv.drift = alive[rank].drift;
    cv.status = alive[rank].status;
    if (cv.status != ChainStatus::Converged && warnings) {
      std::ostringstream os;
      os << "critical value K=" << K << " is not accepted as converged (drift " << cv.drift
         << " over " << alive[rank].n_points
         << " schedule points); extend the N schedule or raise precision to firm up the digits";
      warnings->push_back(os.str());
    }
    out.push_back(cv);
  }
  for (int k : K_list) {
    bool found = false;
    for (const auto& cv : out) found = found || cv.K == k;
    if (!found && warnings) {
      std::ostringstream os;
      os << "no chain found for critical index K=" << k;
      warnings->push_back(os.str());
    }
  }
  return out;
}

BoundStateCount bound_state_count(double v0, const ScanConfig& cfg,
                                  const std::vector<CriticalValue>* table) {
  BoundStateCount bc;
  SpectrumResult res = spectrum(v0, cfg);
  bc.count = static_cast<int>(res.states.size());
  if (table) {
    for (const auto& cv : *table) {
      if (std::abs(v0 - cv.v0) < 1e-3 * cv.v0) {
        bc.ambiguous = true;
        bc.nearest_threshold = cv.v0;
      }
    }
  }
  return bc;
}

std::vector<double> numeric_series_coefficients(const ModelContext& ctx, double beta, long N,
                                                const ScanConfig& cfg,
                                                std::vector<std::string>* warnings) {
  std::vector<double> coeffs;
  if (cfg.backend == Backend::Float64) {
    auto seq = coefficient_sequence_generic<double>(ctx.gamma(), ctx.alpha(), beta, N);
    coeffs = series_coefficients_normalized(seq);
  } else {
    MpFloat alpha(ctx.alpha(), cfg.precision_bits);
    MpFloat b(beta, cfg.precision_bits);
    auto seq = coefficient_sequence_generic<MpFloat>(ctx.gamma(), alpha, b, N);
    coeffs = series_coefficients_normalized(seq);
  }
  double peak = 0;
  for (double c : coeffs) peak = std::max(peak, std::abs(c));
  if (!coeffs.empty() && peak > 0 && std::abs(coeffs.back()) > 1e-12 * peak && warnings) {
    std::ostringstream os;
    os << "series tail |c_N|/max = " << std::abs(coeffs.back()) / peak
       << " at N=" << N << "; consider a larger truncation order";
    warnings->push_back(os.str());
  }
  return coeffs;
}

}  // namespace hyperwell
