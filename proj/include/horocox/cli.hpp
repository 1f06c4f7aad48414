#pragma once

// Command dispatch for the horocox tool. Kept in the library so tests can
// drive commands in-process.

#include <iostream>
#include <string>
#include <vector>

namespace horocox {

// Exit codes: 0 success, 1 validation failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace horocox
