#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace derw {

// Runs the command line given as plain arguments (no program name). Returns
// the process exit status: 0 on success, 1 when a verification reported
// failures, 2 on usage or input errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace derw
