#ifndef RIGID_CLI_HPP_
#define RIGID_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace rigid::cli {

// Runs one command line (without the program name). Writes a JSON report to
// `out` and returns 0 when every check passes, 1 when a check fails and 2 on
// malformed input or usage.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace rigid::cli

#endif  // RIGID_CLI_HPP_
