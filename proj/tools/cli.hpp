#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hajos::cli {

enum ExitCode : int { kOk = 0, kFound = 1, kUsage = 2 };

/// Runs one command; args excludes the program name. Graph6 and JSON lines stream through in/out.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hajos::cli
