#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aaf {

// Full command-line front end; returns the process exit code.
// 0 = success, 1 = check failures, 2 = usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace aaf
