#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ffg::cli {

// Runs one subcommand. `args` excludes the program name. Returns 0 on
// success, 1 on domain errors or nonzero experiment violations, 2 on usage
// errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffg::cli
