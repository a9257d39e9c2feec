#pragma once

#include <iosfwd>

namespace vpos {

// Full command-line entry point; returns the process exit code.
// 0 = ok, 1 = a verification check found a counterexample,
// 2 = usage or input parse error, 3 = oracle budget exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vpos
