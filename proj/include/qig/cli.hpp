#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qig {

/// Entry point of the `qig` tool; `args` excludes the program name.
/// Returns 0 on success, 1 when a verification suite fails, 2 on usage or
/// input validation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qig
