#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ewkit {

// Full command-line front end with injectable streams (argv without the
// program name). Exit codes: 0 success / PASS, 1 verification FAIL,
// 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err);

}  // namespace ewkit
