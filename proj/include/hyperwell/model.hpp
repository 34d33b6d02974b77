#pragma once

#include <cmath>
#include <stdexcept>

namespace hyperwell {

/// Parity sector of the symmetric double well: 0 = even, 1 = odd.
enum class Parity : int { Even = 0, Odd = 1 };

inline int parity_index(Parity p) { return static_cast<int>(p); }

/// Immutable problem context for one (parity, coupling) pair.
///
/// The coupling enters as alpha = -sqrt(v0) < 0; v0 is always derived from
/// alpha so the two can never drift apart.  beta = sqrt(-epsilon) for a bound
/// state is confined to the open interval (0, beta_max()).
class ModelContext {
 public:
  ModelContext(Parity parity, double alpha) : parity_(parity), alpha_(alpha) {
    if (!(alpha < 0.0)) throw std::invalid_argument("ModelContext: alpha must be negative");
    if (!std::isfinite(alpha)) throw std::invalid_argument("ModelContext: alpha must be finite");
  }

  static ModelContext from_v0(Parity parity, double v0) {
    if (!(v0 > 0.0)) throw std::invalid_argument("ModelContext: v0 must be positive");
    return ModelContext(parity, -std::sqrt(v0));
  }

  Parity parity() const { return parity_; }
  int gamma() const { return static_cast<int>(parity_); }
  double alpha() const { return alpha_; }
  double v0() const { return alpha_ * alpha_; }

  /// Upper bound for beta: 2|alpha|/sqrt(27).  Bound states live in (0, beta_max).
  double beta_max() const { return 2.0 * std::abs(alpha_) / std::sqrt(27.0); }

 private:
  Parity parity_;
  double alpha_;
};

}  // namespace hyperwell
