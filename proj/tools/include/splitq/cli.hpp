#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitq::cli {

// Runs the command line `args` (without the program name). Returns the
// process exit code: 0 on success or a true verdict, 1 on a false verdict,
// 2 on usage or evaluation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitq::cli
