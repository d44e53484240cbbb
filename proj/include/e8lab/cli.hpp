#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace e8lab::cli {

/// Exit codes: 0 success, 1 domain error (error object on stdout), 2 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace e8lab::cli
