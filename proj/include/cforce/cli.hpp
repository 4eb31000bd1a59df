#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace cforce {

// Runs one CLI invocation. args excludes the program name. `in` serves as
// standard input for '-' graph arguments. Exit codes: 0 success, 1
// computation or precondition error, 2 usage error, 3 verify suite failure.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cforce
