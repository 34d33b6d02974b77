#include "hyperwell/serialize.hpp"

#include <cstdio>

namespace hyperwell {

using nlohmann::json;

json to_json(const PolynomialSolution& sol) {
  json j;
  j["gamma"] = sol.gamma;
  j["n"] = sol.n;
  j["i"] = sol.index;
  j["alpha"] = sol.alpha_decimal;
  j["alpha_certified_digits"] = sol.certified_digits;
  json defining = json::array();
  for (const auto& c : sol.ring->modulus().coeffs()) defining.push_back(c.get_str());
  j["defining_polynomial"] = defining;  // constant term first
  j["beta"] = sol.beta;
  j["epsilon"] = sol.epsilon;
  json coeffs = json::array();
  for (const auto& vec : sol.coeffs_exact) {
    json elem = json::array();  // rational coordinates in powers of alpha
    for (const auto& r : vec) elem.push_back(r.get_str());
    coeffs.push_back(elem);
  }
  j["coefficients_exact"] = coeffs;
  j["coefficients_float"] = sol.coeffs_float;
  return j;
}

json to_json(const Eigenvalue& ev) {
  json j;
  j["parity"] = ev.parity == Parity::Even ? "even" : "odd";
  j["nu"] = ev.nu;
  j["beta"] = ev.beta;
  j["epsilon"] = ev.epsilon;
  j["N_final"] = ev.N_final;
  j["drift"] = ev.drift;
  j["status"] = to_string(ev.status);
  return j;
}

json to_json(const CriticalValue& cv) {
  json j;
  j["K"] = cv.K;
  j["parity"] = cv.parity == Parity::Even ? "even" : "odd";
  j["alpha"] = cv.alpha;
  j["v0"] = cv.v0;
  j["N_final"] = cv.N_final;
  j["drift"] = cv.drift;
  j["status"] = to_string(cv.status);
  return j;
}

json to_json(const OracleState& st) {
  json j;
  j["epsilon"] = st.epsilon;
  j["parity"] = st.parity == 0 ? "even" : "odd";
  j["nodes"] = st.nodes;
  j["boundary_amp"] = st.boundary_amp;
  return j;
}

std::string fmt_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

}  // namespace hyperwell
