#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace melonic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. Worker count comes from MELONIC_WORKERS.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace melonic::cli
