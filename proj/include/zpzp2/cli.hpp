#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zpzp2 {

// Entry point behind the zpzp2 binary, callable in-process for tests.
// Exit codes: 0 success, 1 failed verification, 2 invalid parameters,
// 3 enumeration cap exceeded, 4 malformed input file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zpzp2
