#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace matchlef::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // refuted claim, strict-mode correction, or non-Lefschetz verdict
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchlef::cli
