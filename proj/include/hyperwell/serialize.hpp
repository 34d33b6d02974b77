#pragma once

#include <string>

#include <json.hpp>

#include "hyperwell/exact_solutions.hpp"
#include "hyperwell/fd_oracle.hpp"
#include "hyperwell/spectrum.hpp"

namespace hyperwell {

inline constexpr const char* kSchemaVersion = "1";

/// JSON record for an exact polynomial solution: the isolated root as a
/// certified decimal string, the defining integer polynomial, and the series
/// coefficients both exactly (rational coordinates in powers of alpha modulo
/// the defining polynomial) and as binary64 mirrors.
nlohmann::json to_json(const PolynomialSolution& sol);

nlohmann::json to_json(const Eigenvalue& ev);
nlohmann::json to_json(const CriticalValue& cv);
nlohmann::json to_json(const OracleState& st);

/// Fixed-precision decimal for deterministic CSV output.
std::string fmt_sig(double v, int digits = 12);

}  // namespace hyperwell
