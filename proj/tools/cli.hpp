#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkm::cli {

// Runs one subcommand. args excludes the program name.
// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gkm::cli
