#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sasaki {

// Runs the command line; returns 0 on all-pass, 1 on a failed check, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sasaki
