#pragma once

#include <string>
#include <vector>

#include "gsws/model.hpp"

namespace gsws {

/// One verification check. expected_pass = false marks the documented
/// approximation-gap checks (the closed-form matching conditions drop
/// O(e^{-aL}) terms, so they cannot meet oracle-grade tolerances at finite
/// aL; the exact-matching twins of those checks must pass instead). The
/// report treats "expected to fail but passed" as an error too, so the gap
/// cannot silently absorb regressions.
struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  bool expected_pass = true;
  double measured = 0.0;
  double threshold = 0.0;
  std::string note;
};

struct VerifyOptions {
  bool negative_control = false;  // corrupt the theta branch: the branch
                                  // invariance check must then fail
  bool quick = false;             // smaller grids for unit-test runs
};

/// Value/derivative mismatch of the mirror-assembled closed-form solution
/// at x = 0, relative to the state's interior scale. Measured with
/// one-sided cubic stencils that avoid x = 0 itself.
struct ContinuityDefect {
  double value_jump = 0.0;
  double derivative_jump = 0.0;
};

ContinuityDefect matching_continuity(const PotentialParams& p, Complex energy,
                                     Regime regime, Parity parity,
                                     bool second_solution,
                                     ThetaBranch branch = ThetaBranch::kPlus);

/// The full oracle-vs-analytic suite: unitarity, reference resonance and
/// spectrum tables, oracle agreement (closed-form and exact-matching),
/// quasi-bound reference values and linkage, branch invariance, wavefunction
/// continuity, grid stability, limiting behavior. Reference-table checks run
/// only when the parameters match the tabulated set (V0=100, W0=250, a=1,
/// L=6, mc2=940, hbarc=197.329) and are skipped otherwise.
std::vector<CheckResult> run_verification(const PotentialParams& p,
                                          const VerifyOptions& opt = {});

/// Overall verdict: every check in its expected state.
bool verification_passed(const std::vector<CheckResult>& checks);

}  // namespace gsws
