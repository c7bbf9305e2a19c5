#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace gkdv::cli {

// Parses and dispatches one invocation. args excludes the program name.
// Exit codes: 0 success, 1 usage error, 2 numeric or I/O failure
// (a table run with failing cells, unreadable model file, diverged
// training). Streams are injectable for tests.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace gkdv::cli
