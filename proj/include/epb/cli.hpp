#pragma once

#include <string>
#include <vector>

namespace epb::cli {

/// Run the command line given argv-style arguments (without the program
/// name). Returns the process exit code: 0 on success, 1 on input errors,
/// 2 on internal invariant violations.
int run(const std::vector<std::string>& args);

/// Full help text (the flag reference used by the docs test).
std::string help_text();

} // namespace epb::cli
