#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ceh::cli {

enum ExitCode : int { success = 0, verification_failed = 1, usage_error = 2 };

// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ceh::cli
