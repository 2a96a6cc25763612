#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3lat {

// Exit codes: 0 all claims pass / search found, 1 some claim failed,
// 2 input error, 3 only inconclusive (bound-limited) outcomes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInconclusive = 3;

// Entry point behind the `k3lat` binary.  `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3lat
