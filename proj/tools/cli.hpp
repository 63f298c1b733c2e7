#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bluher::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // verify mismatch or internal check failure
inline constexpr int kExitInvalid = 2;       // bad parameters
inline constexpr int kExitTooLarge = 3;      // FieldTooLarge

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bluher::cli
