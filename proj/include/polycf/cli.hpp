#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycf {

// Full command-line driver, in-process: args exclude the program name.
// Returns the process exit code:
//   0 success, 1 usage/parse/parameter errors, 2 no convergence,
//   3 reference-oracle inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycf
