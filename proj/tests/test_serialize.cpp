#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperwell/serialize.hpp"

using namespace hyperwell;

TEST_CASE("eigenvalue and critical-value records") {
  Eigenvalue ev;
  ev.parity = Parity::Odd;
  ev.nu = 3;
  ev.beta = 1.25;
  ev.epsilon = -1.5625;
  ev.N_final = 40;
  ev.drift = 1e-11;
  ev.status = ChainStatus::Converged;
  auto j = to_json(ev);
  CHECK(j["parity"] == "odd");
  CHECK(j["nu"] == 3);
  CHECK(j["epsilon"].get<double>() == -1.5625);
  CHECK(j["status"] == "converged");

  CriticalValue cv;
  cv.K = 2;
  cv.parity = Parity::Even;
  cv.alpha = -5.272715881;
  cv.v0 = cv.alpha * cv.alpha;
  cv.status = ChainStatus::Unconverged;
  auto jc = to_json(cv);
  CHECK(jc["K"] == 2);
  CHECK(jc["parity"] == "even");
  CHECK(jc["status"] == "unconverged");
}

TEST_CASE("oracle state record") {
  OracleState st;
  st.epsilon = -2.5;
  st.parity = 1;
  st.nodes = 1;
  st.boundary_amp = 1e-12;
  auto j = to_json(st);
  CHECK(j["parity"] == "odd");
  CHECK(j["nodes"] == 1);
}

TEST_CASE("fixed significant-digit formatting is deterministic") {
  CHECK(fmt_sig(-5.3027756377319946, 12) == "-5.30277563773");
  CHECK(fmt_sig(-5.3027756377319946, 12) == fmt_sig(-5.3027756377319946, 12));
  CHECK(fmt_sig(1.0, 12) == "1");
  CHECK(fmt_sig(0.125, 6) == "0.125");
}
