#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclojones::cli {

// Exit codes: 0 success, 1 usage or validation error, 2 internal
// mathematical inconsistency (a verification failed).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconsistent = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclojones::cli
