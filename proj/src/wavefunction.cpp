#include "hyperwell/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "hyperwell/asymptotics.hpp"

namespace hyperwell {

namespace {

/// log(1/cosh^2 z), overflow-free.
double log_xi(double z) {
  double a = std::abs(z);
  return -2.0 * (a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2_v<double>);
}

double xi_of(double z) {
  double c = std::cosh(z);
  if (c < 1e150) return 1.0 / (c * c);
  return std::exp(log_xi(z));
}

/// Composite Simpson weights on a uniform grid with an odd node count.
double simpson(const std::vector<double>& f, double h) {
  size_t n = f.size();
  double s = f.front() + f.back();
  for (size_t i = 1; i + 1 < n; ++i) s += f[i] * ((i % 2 == 1) ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

double evaluate_phi(int gamma, double alpha, double beta, std::span<const double> coeffs,
                    double z) {
  if (!(beta > 0)) throw std::invalid_argument("evaluate_phi: beta must be positive");
  double lx = log_xi(z);
  double xi = xi_of(z);
  double y = 0;
  for (size_t j = coeffs.size(); j-- > 0;) y = y * xi + coeffs[j];
  double envelope = std::exp(0.5 * beta * lx + 0.5 * alpha * xi);
  double odd = (gamma == 1) ? std::tanh(z) : 1.0;
  return envelope * odd * y;
}

double default_half_width(double beta_min) {
  const double z_plus = std::log(std::sqrt(3.0) + std::sqrt(2.0));
  return std::max(12.0, z_plus + 8.0 / std::sqrt(2.0 * beta_min));
}

GridWavefunction sample_wavefunction(int gamma, double alpha, double beta,
                                     std::span<const double> coeffs, WfSource source, double L,
                                     int points) {
  if (points < 3) throw std::invalid_argument("sample_wavefunction: need at least 3 points");
  if (points % 2 == 0) ++points;
  GridWavefunction w;
  w.parity = gamma == 0 ? Parity::Even : Parity::Odd;
  w.source = source;
  w.z.resize(points);
  w.values.resize(points);
  double h = 2.0 * L / (points - 1);
  int mid = (points - 1) / 2;
  // Evaluate on z >= 0 and reflect so the parity symmetry is exact by
  // construction.
  for (int i = mid; i < points; ++i) {
    double z = (i - mid) * h;
    double v = evaluate_phi(gamma, alpha, beta, coeffs, z);
    w.z[i] = z;
    w.values[i] = v;
    int iref = 2 * mid - i;
    w.z[iref] = -z;
    w.values[iref] = (gamma == 1) ? -v : v;
  }
  std::vector<double> f2(w.values.size());
  for (size_t i = 0; i < f2.size(); ++i) f2[i] = w.values[i] * w.values[i];
  w.norm = std::sqrt(simpson(f2, h));
  return w;
}

GridWavefunction normalize(GridWavefunction w) {
  if (!(w.norm > 0) || !std::isfinite(w.norm))
    throw std::invalid_argument("normalize: zero or invalid norm");
  double s = 1.0 / w.norm;
  for (auto& v : w.values) v *= s;
  w.norm = 1.0;
  return w;
}

int count_nodes(const GridWavefunction& w, std::vector<std::string>* warnings) {
  double peak = 0;
  for (double v : w.values) peak = std::max(peak, std::abs(v));
  double floor = 1e-10 * peak;
  int nodes = 0;
  int last_sign = 0;
  double last_mag = 0;
  for (size_t i = 0; i < w.values.size(); ++i) {
    double v = w.values[i];
    if (std::abs(v) <= floor) continue;
    int s = v > 0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) {
      ++nodes;
      if ((last_mag < 10 * floor || std::abs(v) < 10 * floor) && warnings) {
        warnings->push_back("ambiguous node near z=" + std::to_string(w.z[i]) +
                            ": sign change close to the noise floor");
      }
    }
    last_sign = s;
    last_mag = std::abs(v);
  }
  return nodes;
}

double shape_expectation(const GridWavefunction& w) {
  if (w.z.size() < 3) throw std::invalid_argument("shape_expectation: grid too small");
  double h = w.z[1] - w.z[0];
  std::vector<double> f(w.z.size());
  for (size_t i = 0; i < f.size(); ++i)
    f[i] = w.values[i] * w.values[i] * shape_function(w.z[i]);
  return simpson(f, h);
}

void write_csv(const GridWavefunction& w, std::ostream& os) {
  os << "z,phi\n";
  char buf[64];
  for (size_t i = 0; i < w.z.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", w.z[i], w.values[i]);
    os << buf;
  }
}

}  // namespace hyperwell
