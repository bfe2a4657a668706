#pragma once

namespace obsroute {

/// Command line entry point. Exit codes: 0 success, 1 invalid input,
/// 2 infeasible or absent result, 3 internal invariant violation.
int cli_dispatch(int argc, const char* const* argv);

}  // namespace obsroute
