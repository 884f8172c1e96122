#pragma once

#include <iosfwd>

namespace qcov::cli {

enum ExitCode : int { ok = 0, parse_error = 1, domain_error = 2, check_failed = 3 };

/// Entry point shared by the qcov executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcov::cli
