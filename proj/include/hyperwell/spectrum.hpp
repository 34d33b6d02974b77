#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hyperwell/model.hpp"
#include "hyperwell/recurrence.hpp"
#include "hyperwell/scalar.hpp"

namespace hyperwell {

/// Knobs for the c_N = 0 root scans.  The defaults reproduce the quoted
/// critical couplings for shallow wells; deep wells need a longer schedule
/// (chains only start converging once N exceeds roughly |alpha|) and the
/// multiprecision backend.
struct ScanConfig {
  std::vector<long> N_schedule = {10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60};
  int grid_points = 2000;
  double root_tol = 1e-12;   // bisection width in beta (or alpha)
  double conv_tol = 1e-9;    // cross-N drift for chain acceptance
  Backend backend = Backend::Float64;
  unsigned precision_bits = 192;
  /// Optional restriction of the beta scan window (used by cross-checks that
  /// only need the neighborhood of a known root).  NaN means full interval.
  double beta_window_lo = std::numeric_limits<double>::quiet_NaN();
  double beta_window_hi = std::numeric_limits<double>::quiet_NaN();

  static std::vector<long> schedule_to(long n_max, long start = 10, long step = 5);
};

enum class ChainStatus { Converged, Unconverged, Spurious };

std::string to_string(ChainStatus s);

struct Eigenvalue {
  Parity parity = Parity::Even;
  int nu = -1;  // global index assigned by spectrum(); -1 before merging
  double beta = 0;
  double epsilon = 0;
  long N_final = 0;
  double drift = std::numeric_limits<double>::infinity();
  ChainStatus status = ChainStatus::Unconverged;
};

struct SpectrumDiagnostics {
  std::vector<Eigenvalue> rejected;  // unconverged / spurious chains
  std::vector<std::string> warnings;
  bool parity_alternation_ok = true;
};

struct SpectrumResult {
  std::vector<Eigenvalue> states;  // converged, sorted by epsilon ascending, nu = 0,1,...
  SpectrumDiagnostics diagnostics;
};

/// All bracketed roots of c_N(beta) on the open interval (0, 2|alpha|/sqrt(27)),
/// bisected to root_tol, ascending.  Close pairs trigger an automatic local
/// grid refinement and a warning.
std::vector<double> beta_roots_at_order(const ModelContext& ctx, long N, const ScanConfig& cfg,
                                        std::vector<std::string>* warnings = nullptr);

/// Runs beta_roots_at_order across the N schedule, matches roots into chains
/// by nearest beta, and accepts chains whose drift stays below conv_tol over
/// the last three schedule steps.
std::vector<Eigenvalue> eigenvalues(const ModelContext& ctx, const ScanConfig& cfg,
                                    SpectrumDiagnostics* diag = nullptr);

/// Merged even+odd spectrum with global indices and a parity-alternation
/// audit.  Never throws on an empty result: deep wells may simply need a
/// longer schedule, and the diagnostics say so.
SpectrumResult spectrum(double v0, const ScanConfig& cfg);

struct CriticalValue {
  int K = 0;
  Parity parity = Parity::Even;
  double alpha = 0;
  double v0 = 0;
  long N_final = 0;
  double drift = std::numeric_limits<double>::infinity();
  ChainStatus status = ChainStatus::Unconverged;
};

/// Critical couplings: beta = 0, solve c_N(alpha) = 0 over
/// alpha in (-(4 K_max + 8), -0.5), same chain logic as eigenvalues().
/// K is assigned by |alpha| rank within the parity sector (even K for
/// gamma = 0, odd K for gamma = 1).
std::vector<CriticalValue> critical_alpha(Parity parity, const std::vector<int>& K_list,
                                          const ScanConfig& cfg,
                                          std::vector<std::string>* warnings = nullptr);

struct BoundStateCount {
  int count = 0;
  bool ambiguous = false;        // v0 within tolerance of a critical threshold
  double nearest_threshold = 0;  // the v0_K that triggered ambiguity (0 if none)
};

/// Size of the converged spectrum, optionally cross-checked against a
/// critical-value table for near-threshold ambiguity.
BoundStateCount bound_state_count(double v0, const ScanConfig& cfg,
                                  const std::vector<CriticalValue>* table = nullptr);

/// Frobenius coefficients c_0..c_N at a converged root, collapsed to doubles
/// with a common scale (wavefunction reconstruction renormalizes anyway).
/// Appends a warning if the truncated tail is not yet negligible.
std::vector<double> numeric_series_coefficients(const ModelContext& ctx, double beta, long N,
                                                const ScanConfig& cfg,
                                                std::vector<std::string>* warnings = nullptr);

}  // namespace hyperwell
