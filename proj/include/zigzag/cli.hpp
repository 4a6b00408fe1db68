#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zigzag {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when the input violates a precondition, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zigzag
