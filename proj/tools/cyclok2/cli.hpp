#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclok2::cli {

/// Runs one command line (without the program name). Returns 0 when no check
/// failed, 1 when at least one did, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclok2::cli
