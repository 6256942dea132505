#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mapart {

/// Runs the command line tool on args (without the program name). Returns
/// 0 on success, 1 on user errors and 2 on internal invariant violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mapart
