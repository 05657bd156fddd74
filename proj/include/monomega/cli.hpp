#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monomega {

// Runs one CLI invocation. args excludes the program name. Exit codes:
// 0 success, 1 verification failure, 2 parse/usage error, 3 precondition
// violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace monomega
