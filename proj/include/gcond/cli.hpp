#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcond::cli {

// Exit code contract: 0 pass/success, 2 unparsable input (command line or
// graph file), 3 hypothesis violation, 4 identity failure, 1 anything else.
inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitHypothesis = 3;
inline constexpr int kExitIdentityFail = 4;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcond::cli
