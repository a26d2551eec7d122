#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyodds {

// Full command-line front end. Returns the process exit code:
//   0  success (report written to out, or to --output)
//   1  domain error (invalid parameters, non-polygonal input, budget)
//   2  usage error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyodds
