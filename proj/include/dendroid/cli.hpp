#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dendroid {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // e.g. the model is not dendroid
inline constexpr int kExitUsage = 2;    // bad flags, unreadable files, malformed words

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dendroid
