#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lispace::cli {

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Exit codes: 0 ok, 1 input parse/I-O error, 2 usage error,
/// 3 internal invariant violation.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lispace::cli
