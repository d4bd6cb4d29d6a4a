#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkforge {

// Full command-line front end; returns the process exit code.
// 0 = all verdicts pass, 1 = a verdict failed, 2 = input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gkforge
