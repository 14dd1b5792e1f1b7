#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ckstar::cli {

/// Runs one subcommand. args[0] is the program name. Writes a single JSON
/// document to `out`; returns 0 on success, 1 on domain errors and 2 on
/// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace ckstar::cli
