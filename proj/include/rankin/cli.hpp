#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rankin::cli {

/// Runs one command. args excludes the program name. Returns the exit code:
/// 0 ok or PASS, 1 FAIL or SKIPPED verdicts, 2 usage, parse and domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankin::cli
