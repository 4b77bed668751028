#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balanced::cli {

// Exit codes shared by every subcommand.
inline constexpr int kPass = 0;
inline constexpr int kInputError = 1;
inline constexpr int kNegative = 2;

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balanced::cli
