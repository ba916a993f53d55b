#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace condw::cli {

/// Exit codes: affirmative/pass, negative/fail, fault.
inline constexpr int kYes = 0;
inline constexpr int kNo = 2;
inline constexpr int kFault = 1;

/// Run the tool on `args` (args[0] is the program name). Diagnostics go to `err`
/// only when the result is kFault.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace condw::cli
