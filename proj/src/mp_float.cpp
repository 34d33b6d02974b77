#include "hyperwell/mp_float.hpp"

#include <cmath>
#include <vector>

namespace hyperwell {

std::string MpFloat::to_string(int digits) const {
  if (!is_finite()) return "nan";
  if (sign() == 0) return "0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sgn;
  if (!mant.empty() && mant[0] == '-') {
    sgn = "-";
    mant.erase(mant.begin());
  }
  // mant is the digit string with the decimal point after position 0 and
  // exponent e such that value = 0.mant * 10^e.
  std::string out = sgn + mant.substr(0, 1) + "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

}  // namespace hyperwell
