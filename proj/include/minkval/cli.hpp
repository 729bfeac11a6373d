#pragma once

#include <ostream>

namespace minkval {

// Entry point of the command-line tool. Verbs: compute, verify,
// counterexample, suite, slice. Returns the process exit code: 0 on success,
// 1 on a failed verification or a geometric error, 2 on malformed input
// (ParseError, ConfigError, bad flags).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minkval
