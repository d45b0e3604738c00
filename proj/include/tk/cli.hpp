#pragma once

// Command-line front end. Every command reads one JSON document (a file or
// stdin) and writes one JSON document to stdout.
//
// Exit status: 0 success, 1 valid input without a solution, 2 invalid input,
// 3 a certificate failed re-verification.

#include <iosfwd>
#include <string>
#include <vector>

namespace tk {

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace tk
