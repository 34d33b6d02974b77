// Command-line front end: spectra, exact polynomial solutions, critical
// couplings, parameter scans, the finite-difference oracle, and a combined
// consistency audit.  Every numeric path lives in the library; this file only
// parses flags and formats output.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hyperwell/asymptotics.hpp"
#include "hyperwell/exact_solutions.hpp"
#include "hyperwell/fd_oracle.hpp"
#include "hyperwell/serialize.hpp"
#include "hyperwell/spectrum.hpp"
#include "hyperwell/wavefunction.hpp"

using namespace hyperwell;
using nlohmann::json;

namespace {

enum class OutMode { Table, Csv, Json };

struct CommonOpts {
  int digits = 12;
  OutMode mode = OutMode::Table;
  unsigned precision_bits = 0;  // 0 = binary64 backend
};

std::string fmt(double v, const CommonOpts& c) { return fmt_sig(v, c.digits); }

void add_output_flags(CLI::App* cmd, CommonOpts& c) {
  auto* csv = cmd->add_flag_callback("--csv", [&c] { c.mode = OutMode::Csv; },
                                     "emit CSV (header row, '.' decimal, no locale)");
  cmd->add_flag_callback("--json", [&c] { c.mode = OutMode::Json; },
                         "emit a single JSON object")
      ->excludes(csv);
  cmd->add_option("--digits", c.digits, "significant digits in table/CSV output")
      ->check(CLI::Range(3, 17));
  cmd->add_option("--precision", c.precision_bits,
                  "mantissa bits for the multiprecision backend (0 = binary64)");
}

/// HYPERWELL_PRECISION_BITS overrides the default backend unless --precision
/// was given explicitly.
void apply_env_precision(CommonOpts& c) {
  if (c.precision_bits != 0) return;
  if (const char* e = std::getenv("HYPERWELL_PRECISION_BITS")) {
    long v = std::strtol(e, nullptr, 10);
    if (v > 0) c.precision_bits = static_cast<unsigned>(v);
  }
}

ScanConfig make_config(const CommonOpts& c, double v0, long n_max_flag) {
  ScanConfig cfg;
  if (c.precision_bits != 0) {
    cfg.backend = Backend::MultiPrec;
    cfg.precision_bits = c.precision_bits;
  }
  long n_max = n_max_flag;
  if (n_max <= 0) {
    // Chains only start converging once N passes a few multiples of |alpha|.
    double abs_alpha = std::sqrt(v0);
    n_max = std::max<long>(60, static_cast<long>(std::ceil(4.0 * abs_alpha / 10.0)) * 10);
  }
  cfg.N_schedule = ScanConfig::schedule_to(std::min<long>(n_max, 60), 10, 5);
  for (long n = 70; n <= n_max; n += 10) cfg.N_schedule.push_back(n);
  return cfg;
}

json config_echo(const ScanConfig& cfg) {
  json j;
  j["N_schedule"] = cfg.N_schedule;
  j["grid_points"] = cfg.grid_points;
  j["root_tol"] = cfg.root_tol;
  j["conv_tol"] = cfg.conv_tol;
  j["backend"] = cfg.backend == Backend::Float64 ? "binary64" : "multiprecision";
  if (cfg.backend == Backend::MultiPrec) j["precision_bits"] = cfg.precision_bits;
  return j;
}

json result_skeleton(const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

int parity_selector(const std::string& s) {
  if (s == "even") return 0;
  if (s == "odd") return 1;
  return 2;  // both
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(double v0, const std::string& parity, long n_max, const std::string& wf_dir,
                 CommonOpts& c) {
  apply_env_precision(c);
  ScanConfig cfg = make_config(c, v0, n_max);
  int psel = parity_selector(parity);
  SpectrumResult res = spectrum(v0, cfg);
  std::vector<Eigenvalue> rows;
  for (const auto& s : res.states) {
    if (psel == 2 || static_cast<int>(s.parity) == psel) rows.push_back(s);
  }

  if (!wf_dir.empty()) {
    for (const auto& s : rows) {
      ModelContext ctx(s.parity, -std::sqrt(v0));
      auto coeffs = numeric_series_coefficients(ctx, s.beta, s.N_final, cfg);
      double L = default_half_width(res.states.back().beta);
      auto w = normalize(sample_wavefunction(ctx.gamma(), ctx.alpha(), s.beta, coeffs,
                                             WfSource::NumericSeries, L, 4001));
      std::ofstream os(wf_dir + "/wf_nu" + std::to_string(s.nu) + ".csv");
      write_csv(w, os);
    }
  }

  if (c.mode == OutMode::Json) {
    json j = result_skeleton("spectrum");
    j["v0"] = v0;
    j["parity"] = parity;
    j["config"] = config_echo(cfg);
    j["states"] = json::array();
    for (const auto& s : rows) j["states"].push_back(to_json(s));
    j["diagnostics"]["warnings"] = res.diagnostics.warnings;
    j["diagnostics"]["parity_alternation_ok"] = res.diagnostics.parity_alternation_ok;
    j["diagnostics"]["rejected_chains"] = json::array();
    for (const auto& r : res.diagnostics.rejected)
      j["diagnostics"]["rejected_chains"].push_back(to_json(r));
    std::cout << j.dump(2) << "\n";
  } else if (c.mode == OutMode::Csv) {
    std::cout << "nu,parity,beta,epsilon,N_final,drift,status\n";
    for (const auto& s : rows)
      std::cout << s.nu << "," << (s.parity == Parity::Even ? "even" : "odd") << ","
                << fmt(s.beta, c) << "," << fmt(s.epsilon, c) << "," << s.N_final << ","
                << fmt(s.drift, c) << "," << to_string(s.status) << "\n";
  } else {
    std::cout << "bound states at v0 = " << fmt(v0, c) << " (" << rows.size() << " states)\n";
    std::cout << "  nu  parity     beta               epsilon            N    drift\n";
    for (const auto& s : rows)
      std::printf("  %-3d %-7s %-18s %-18s %-4ld %s\n", s.nu,
                  s.parity == Parity::Even ? "even" : "odd", fmt(s.beta, c).c_str(),
                  fmt(s.epsilon, c).c_str(), s.N_final, fmt(s.drift, c).c_str());
    if (rows.empty()) std::cout << "  0 states\n";
    for (const auto& w : res.diagnostics.warnings) std::cout << "warning: " << w << "\n";
  }
  // At least one even bound state exists for every v0 > 0; failing to converge
  // any even state is a solver failure, an empty odd sector is not.
  bool even_requested = psel == 0 || psel == 2;
  bool even_found = false;
  for (const auto& s : res.states) even_found = even_found || s.parity == Parity::Even;
  if (even_requested && !even_found) return 1;
  return 0;
}

// ------------------------------------------------------------------- exact

int run_exact(long n, const std::string& parity, bool all_roots, CommonOpts& c) {
  int psel = parity_selector(parity);
  std::vector<Parity> sectors;
  if (psel == 0 || psel == 2) sectors.push_back(Parity::Even);
  if (psel == 1 || psel == 2) sectors.push_back(Parity::Odd);

  json jout = result_skeleton("exact");
  jout["n"] = n;
  jout["sectors"] = json::array();

  if (c.mode == OutMode::Csv)
    std::cout << "parity,n,i,alpha,beta,epsilon,accepted,window_lo,window_hi\n";

  for (Parity p : sectors) {
    ExactEnumeration en = enumerate_exact(p, n, 1e-14);
    const char* pname = p == Parity::Even ? "even" : "odd";
    json jsec;
    jsec["parity"] = pname;
    jsec["degree"] = en.report.degree;
    jsec["real_roots"] = en.report.real_count;
    jsec["window"] = {en.window.lo, en.window.hi};
    jsec["accepted"] = json::array();
    for (const auto& sol : en.accepted) jsec["accepted"].push_back(to_json(sol));
    jsec["rejected"] = json::array();
    for (const auto& r : en.rejected) jsec["rejected"].push_back(r.approx());
    jout["sectors"].push_back(jsec);

    if (c.mode == OutMode::Csv) {
      for (const auto& sol : en.accepted)
        std::cout << pname << "," << n << "," << sol.index << "," << fmt(sol.alpha_f, c) << ","
                  << fmt(sol.beta, c) << "," << fmt(sol.epsilon, c) << ",1,"
                  << fmt(en.window.lo, c) << "," << fmt(en.window.hi, c) << "\n";
      if (all_roots)
        for (const auto& r : en.rejected)
          std::cout << pname << "," << n << ",," << fmt(r.approx(), c) << ",,,0,"
                    << fmt(en.window.lo, c) << "," << fmt(en.window.hi, c) << "\n";
    } else if (c.mode == OutMode::Table) {
      std::cout << pname << " sector, n = " << n << ": degree " << en.report.degree << ", "
                << en.report.real_count << " real roots, physical window ("
                << fmt(en.window.lo, c) << ", " << fmt(en.window.hi, c) << ")\n";
      for (const auto& sol : en.accepted)
        std::cout << "  accepted i=" << sol.index << "  alpha = " << sol.alpha_decimal
                  << "  beta = " << fmt(sol.beta, c) << "  epsilon = " << fmt(sol.epsilon, c)
                  << "\n";
      if (all_roots)
        for (const auto& r : en.rejected)
          std::cout << "  rejected    alpha = " << fmt(r.approx(), c) << "\n";
    }
  }
  if (c.mode == OutMode::Json) std::cout << jout.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- critical

int run_critical(int k_max, const std::string& parity, long n_max, CommonOpts& c) {
  apply_env_precision(c);
  if (c.precision_bits == 0) c.precision_bits = 192;  // default to multiprecision here
  ScanConfig cfg;
  cfg.backend = Backend::MultiPrec;
  cfg.precision_bits = c.precision_bits;
  if (n_max <= 0) n_max = 60;
  cfg.N_schedule = ScanConfig::schedule_to(n_max, 10, 5);

  int psel = parity_selector(parity);
  std::vector<CriticalValue> all;
  std::vector<std::string> warnings;
  int expected = 0;
  if (psel == 0 || psel == 2) {
    std::vector<int> ks;
    for (int k = 2; k <= k_max; k += 2) ks.push_back(k);
    expected += static_cast<int>(ks.size());
    if (!ks.empty()) {
      auto r = critical_alpha(Parity::Even, ks, cfg, &warnings);
      all.insert(all.end(), r.begin(), r.end());
    }
  }
  if (psel == 1 || psel == 2) {
    std::vector<int> ks;
    for (int k = 1; k <= k_max; k += 2) ks.push_back(k);
    expected += static_cast<int>(ks.size());
    if (!ks.empty()) {
      auto r = critical_alpha(Parity::Odd, ks, cfg, &warnings);
      all.insert(all.end(), r.begin(), r.end());
    }
  }
  std::sort(all.begin(), all.end(),
            [](const CriticalValue& a, const CriticalValue& b) { return a.K < b.K; });

  if (c.mode == OutMode::Json) {
    json j = result_skeleton("critical");
    j["k_max"] = k_max;
    j["config"] = config_echo(cfg);
    j["critical_values"] = json::array();
    for (const auto& cv : all) j["critical_values"].push_back(to_json(cv));
    j["diagnostics"]["warnings"] = warnings;
    std::cout << j.dump(2) << "\n";
  } else if (c.mode == OutMode::Csv) {
    std::cout << "K,parity,alpha,v0,N_final,drift,status\n";
    for (const auto& cv : all)
      std::cout << cv.K << "," << (cv.parity == Parity::Even ? "even" : "odd") << ","
                << fmt(cv.alpha, c) << "," << fmt(cv.v0, c) << "," << cv.N_final << ","
                << fmt(cv.drift, c) << "," << to_string(cv.status) << "\n";
  } else {
    std::cout << "critical couplings (new bound state appears at v0 > v0_K)\n";
    std::cout << "  K   parity   alpha_K            v0_K               N    drift\n";
    for (const auto& cv : all)
      std::printf("  %-3d %-7s %-18s %-18s %-4ld %s\n", cv.K,
                  cv.parity == Parity::Even ? "even" : "odd", fmt(cv.alpha, c).c_str(),
                  fmt(cv.v0, c).c_str(), cv.N_final, fmt(cv.drift, c).c_str());
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
  }
  return static_cast<int>(all.size()) == expected ? 0 : 1;
}

// -------------------------------------------------------------------- scan

void write_scan_svg(const std::string& path, const std::vector<std::array<double, 2>>& numeric,
                    const std::vector<std::array<double, 2>>& asymptote,
                    const std::vector<std::array<double, 2>>& exact) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  auto extend = [&](const std::vector<std::array<double, 2>>& pts) {
    for (auto& p : pts) {
      xmin = std::min(xmin, p[0]);
      xmax = std::max(xmax, p[0]);
      ymin = std::min(ymin, p[1]);
      ymax = std::max(ymax, p[1]);
    }
  };
  extend(numeric);
  extend(asymptote);
  extend(exact);
  if (xmin > xmax) return;
  double W = 640, H = 480, m = 50;
  auto X = [&](double x) { return m + (x - xmin) / std::max(1e-300, xmax - xmin) * (W - 2 * m); };
  auto Y = [&](double y) { return H - m - (y - ymin) / std::max(1e-300, ymax - ymin) * (H - 2 * m); };
  std::ofstream os(path);
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  if (!asymptote.empty()) {
    os << "<polyline fill='none' stroke='green' stroke-width='1.5' points='";
    for (auto& p : asymptote) os << X(p[0]) << "," << Y(p[1]) << " ";
    os << "'/>\n";
  }
  for (auto& p : numeric)
    os << "<rect x='" << X(p[0]) - 3 << "' y='" << Y(p[1]) - 3
       << "' width='6' height='6' fill='blue'/>\n";
  for (auto& p : exact)
    os << "<circle cx='" << X(p[0]) << "' cy='" << Y(p[1]) << "' r='4' fill='none' stroke='red'/>\n";
  os << "</svg>\n";
}

int run_scan(double v0_from, double v0_to, int steps, int nu, bool with_asymptote,
             bool with_exact, long n_upto, const std::string& svg_path, CommonOpts& c) {
  apply_env_precision(c);
  std::vector<std::array<double, 2>> numeric_pts, asymp_pts, exact_pts;

  std::cout << "kind,v0,nu_or_n,i,epsilon,asymptote\n";
  for (int i = 0; i < steps; ++i) {
    double v0 = steps == 1 ? v0_from
                           : v0_from + (v0_to - v0_from) * static_cast<double>(i) / (steps - 1);
    ScanConfig cfg = make_config(c, v0, 0);
    SpectrumResult res = spectrum(v0, cfg);
    std::string eps_str, asymp_str;
    if (nu < static_cast<int>(res.states.size())) {
      double eps = res.states[nu].epsilon;
      eps_str = fmt(eps, c);
      numeric_pts.push_back({v0, eps});
    }
    if (with_asymptote) {
      double a = harmonic_asymptote(v0, nu / 2);
      asymp_str = fmt(a, c);
      asymp_pts.push_back({v0, a});
    }
    std::cout << "numeric," << fmt(v0, c) << "," << nu << ",," << eps_str << "," << asymp_str
              << "\n";
  }
  if (with_exact) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      for (long n = 0; n <= n_upto; ++n) {
        ExactEnumeration en = enumerate_exact(p, n, 1e-12);
        for (const auto& sol : en.accepted) {
          double v0 = sol.alpha_f * sol.alpha_f;
          std::cout << "exact," << fmt(v0, c) << "," << n << "," << sol.index << ","
                    << fmt(sol.epsilon, c) << ",\n";
          exact_pts.push_back({v0, sol.epsilon});
        }
      }
    }
  }
  if (!svg_path.empty()) write_scan_svg(svg_path, numeric_pts, asymp_pts, exact_pts);
  return 0;
}

// ------------------------------------------------------------------ oracle

int run_oracle(double v0, double L, long M, int k, CommonOpts& c) {
  OracleConfig oc;
  oc.L = L;
  oc.M = M;
  oc.k = k;
  OracleResult r = fd_spectrum(v0, oc);
  if (c.mode == OutMode::Json) {
    json j = result_skeleton("oracle");
    j["v0"] = v0;
    j["config"] = {{"L", oc.L}, {"M", oc.M}, {"k", oc.k}, {"h", oc.h()}};
    j["states"] = json::array();
    for (const auto& s : r.states) j["states"].push_back(to_json(s));
    j["diagnostics"]["warnings"] = r.warnings;
    std::cout << j.dump(2) << "\n";
  } else if (c.mode == OutMode::Csv) {
    std::cout << "index,epsilon,parity,nodes,boundary_amp\n";
    for (size_t i = 0; i < r.states.size(); ++i)
      std::cout << i << "," << fmt(r.states[i].epsilon, c) << ","
                << (r.states[i].parity == 0 ? "even" : "odd") << "," << r.states[i].nodes << ","
                << fmt(r.states[i].boundary_amp, c) << "\n";
  } else {
    std::cout << "finite-difference oracle at v0 = " << fmt(v0, c) << " (h = " << fmt(oc.h(), c)
              << "): " << r.states.size() << " negative eigenvalues\n";
    for (size_t i = 0; i < r.states.size(); ++i)
      std::printf("  %-3zu epsilon = %-18s %-5s nodes = %d\n", i,
                  fmt(r.states[i].epsilon, c).c_str(), r.states[i].parity == 0 ? "even" : "odd",
                  r.states[i].nodes);
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- check

int run_check(double v0, CommonOpts& c) {
  apply_env_precision(c);
  ScanConfig cfg = make_config(c, v0, 0);
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  };

  SpectrumResult res = spectrum(v0, cfg);
  report("parity alternation", res.diagnostics.parity_alternation_ok,
         std::to_string(res.states.size()) + " states");
  if (res.states.empty()) return 1;

  // Wall placement follows the slowest-decaying state, exp(-beta_top z).
  double beta_top = res.states.back().beta;
  OracleConfig oc;
  oc.L = std::min(2200.0, std::max(12.0, 18.0 / std::max(1e-3, beta_top)));
  oc.M = static_cast<long>(2.0 * oc.L / 0.006) | 1;
  oc.k = static_cast<int>(res.states.size()) + 2;
  OracleResult coarse = fd_spectrum(v0, oc);
  OracleConfig oc2 = oc;
  oc2.M = 2 * oc.M + 1;
  OracleResult fine = fd_spectrum(v0, oc2);

  bool count_ok = coarse.states.size() == res.states.size();
  report("oracle count agreement", count_ok,
         "oracle " + std::to_string(coarse.states.size()) + " vs recurrence " +
             std::to_string(res.states.size()));

  bool match_ok = true;
  std::string worst;
  if (count_ok) {
    for (size_t i = 0; i < res.states.size(); ++i) {
      double ch2 = 4.0 / 3.0 * std::abs(coarse.states[i].epsilon - fine.states[i].epsilon);
      double tol = std::max(1e-6, ch2);
      double diff = std::abs(res.states[i].epsilon - fine.states[i].epsilon);
      if (diff > tol) {
        match_ok = false;
        worst = "state " + std::to_string(i) + " diff " + fmt_sig(diff, 3);
      }
    }
  } else {
    match_ok = false;
  }
  report("oracle eigenvalue match", match_ok, worst);

  bool nodes_ok = true;
  for (const auto& s : res.states) {
    ModelContext ctx(s.parity, -std::sqrt(v0));
    auto coeffs = numeric_series_coefficients(ctx, s.beta, s.N_final, cfg);
    double L = default_half_width(res.states.back().beta);
    auto w = normalize(sample_wavefunction(ctx.gamma(), ctx.alpha(), s.beta, coeffs,
                                           WfSource::NumericSeries, L, 6001));
    if (count_nodes(w) != s.nu) nodes_ok = false;
  }
  report("node counts equal nu", nodes_ok, "");

  int hf_states = std::min<int>(2, static_cast<int>(res.states.size()));
  for (int nu = 0; nu < hf_states; ++nu) {
    auto hf = hellmann_feynman_check(v0, nu, 0.0, cfg);
    bool ok = hf.abs_diff <= 1e-4 * std::abs(hf.rhs);
    report("Hellmann-Feynman slope, nu=" + std::to_string(nu), ok,
           "|lhs-rhs|/|rhs| = " + fmt_sig(hf.abs_diff / std::abs(hf.rhs), 3));
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound states of the hyperbolic double well  v(z) = -v0 sinh^4(z)/cosh^6(z)"};
  app.require_subcommand(1);

  CommonOpts c_spec;
  double sp_v0 = 0;
  std::string sp_parity = "both", sp_wfdir;
  long sp_nmax = 0;
  auto* sp = app.add_subcommand("spectrum", "numerical bound-state spectrum at a coupling");
  sp->add_option("--v0", sp_v0, "dimensionless coupling v0 > 0")
      ->required()
      ->check(CLI::PositiveNumber);
  sp->add_option("--parity", sp_parity, "even | odd | both")
      ->check(CLI::IsMember({"even", "odd", "both"}));
  sp->add_option("--N-max", sp_nmax, "largest truncation order (default: auto from v0)");
  sp->add_option("--wf-dir", sp_wfdir, "directory for per-state wavefunction CSV dumps");
  add_output_flags(sp, c_spec);

  CommonOpts c_exact;
  long ex_n = 0;
  std::string ex_parity = "both";
  bool ex_all = false;
  auto* ex = app.add_subcommand("exact", "exact polynomial solutions at degree n");
  ex->add_option("--n", ex_n, "polynomial degree n >= 0")
      ->required()
      ->check(CLI::NonNegativeNumber);
  ex->add_option("--parity", ex_parity, "even | odd | both")
      ->check(CLI::IsMember({"even", "odd", "both"}));
  ex->add_flag("--all-roots", ex_all, "also list roots rejected by the physical window");
  add_output_flags(ex, c_exact);

  CommonOpts c_crit;
  int cr_kmax = 9;
  std::string cr_parity = "both";
  long cr_nmax = 0;
  auto* cr =
      app.add_subcommand("critical", "critical couplings v0_K (thresholds for new bound states)");
  cr->add_option("--k-max", cr_kmax, "largest threshold index K")->check(CLI::Range(1, 20));
  cr->add_option("--parity", cr_parity, "even | odd | both")
      ->check(CLI::IsMember({"even", "odd", "both"}));
  cr->add_option("--N-max", cr_nmax, "largest truncation order (default 60)");
  add_output_flags(cr, c_crit);

  CommonOpts c_scan;
  double sc_from = 0, sc_to = 0;
  int sc_steps = 0, sc_nu = 0;
  bool sc_asymp = false, sc_exact = false;
  long sc_nupto = 8;
  std::string sc_svg;
  auto* sc = app.add_subcommand("scan", "sweep v0 and emit CSV rows (figure data)");
  sc->add_option("--v0-from", sc_from, "first coupling")->required()->check(CLI::PositiveNumber);
  sc->add_option("--v0-to", sc_to, "last coupling")->required()->check(CLI::PositiveNumber);
  sc->add_option("--steps", sc_steps, "number of samples")
      ->required()
      ->check(CLI::Range(1, 100000));
  sc->add_option("--nu", sc_nu, "state index to track")->check(CLI::NonNegativeNumber);
  sc->add_flag("--with-asymptote", sc_asymp, "add the harmonic asymptote column");
  sc->add_flag("--with-exact-overlay", sc_exact, "append exact-solution points (v0, epsilon)");
  sc->add_option("--n-upto", sc_nupto, "largest n for the exact overlay")
      ->check(CLI::Range(0L, 12L));
  sc->add_option("--svg", sc_svg, "write a minimal scatter/line SVG to this path");
  add_output_flags(sc, c_scan);

  CommonOpts c_orc;
  double or_v0 = 0, or_L = 12.0;
  long or_M = 4001;
  int or_k = 10;
  auto* orc = app.add_subcommand("oracle", "independent finite-difference eigensolver");
  orc->add_option("--v0", or_v0, "dimensionless coupling v0 > 0")
      ->required()
      ->check(CLI::PositiveNumber);
  orc->add_option("--L", or_L, "domain half-width")->check(CLI::PositiveNumber);
  orc->add_option("--M", or_M, "interior grid points (odd)");
  orc->add_option("--k", or_k, "eigenvalues requested");
  add_output_flags(orc, c_orc);

  CommonOpts c_chk;
  double ck_v0 = 0;
  auto* ck = app.add_subcommand("check", "cross-validate: oracle, nodes, Hellmann-Feynman");
  ck->add_option("--v0", ck_v0, "dimensionless coupling v0 > 0")
      ->required()
      ->check(CLI::PositiveNumber);
  add_output_flags(ck, c_chk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  try {
    if (sp->parsed()) return run_spectrum(sp_v0, sp_parity, sp_nmax, sp_wfdir, c_spec);
    if (ex->parsed()) return run_exact(ex_n, ex_parity, ex_all, c_exact);
    if (cr->parsed()) return run_critical(cr_kmax, cr_parity, cr_nmax, c_crit);
    if (sc->parsed())
      return run_scan(sc_from, sc_to, sc_steps, sc_nu, sc_asymp, sc_exact, sc_nupto, sc_svg,
                      c_scan);
    if (orc->parsed()) return run_oracle(or_v0, or_L, or_M, or_k, c_orc);
    if (ck->parsed()) return run_check(ck_v0, c_chk);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
