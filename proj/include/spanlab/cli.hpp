#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spanlab {

// Exit statuses of the spanlab tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// Environment variable overriding the default size caps.
inline constexpr const char* kCapEnv = "SPANLAB_CAP";

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spanlab
