// Command-line front end.  run_cli is the whole program: tools/nzc_main.cpp
// forwards argv, tests call it directly with captured streams.
//
// Exit codes: 0 success, 1 claim discrepancy, 2 invalid input, 3 cap exceeded.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nzc {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nzc
