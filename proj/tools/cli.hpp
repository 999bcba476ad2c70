#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfs {

/// Runs one subcommand. `args` excludes the program name. Returns 0 when every
/// verdict holds, 1 when a check failed and 2 on a usage or input error.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tfs
