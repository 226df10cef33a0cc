#pragma once

#include <ostream>

namespace thermobound::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 2,
  kSolverFailure = 3,  // bound solver non-convergence or simulator degeneracy
  kToleranceFailure = 4,
};

/// Entry point shared by the executable and the tests. Results go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thermobound::cli
