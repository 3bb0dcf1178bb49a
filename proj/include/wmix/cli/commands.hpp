#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wmix::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kBadInput = 2, kCapacity = 3 };

/// Entry point for the wmix executable. JSON/CSV goes to `out`, messages to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
/// Same, with the program name omitted from `args`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wmix::cli
