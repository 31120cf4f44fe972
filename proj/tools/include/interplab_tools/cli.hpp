#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interplab::tools {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the interplab command line; args[0] is the program name.
/// Returns 0 when every check passes, 1 on a failed check, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interplab::tools
