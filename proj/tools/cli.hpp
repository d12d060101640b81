#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adjecc::cli {

/// Exit codes: 0 success or PASS, 1 FAIL, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace adjecc::cli
