#pragma once

#include <string>
#include <vector>

namespace kmdecomp {

// Process exit codes. Command-line usage problems keep the code the argument
// parser assigns; everything the tool itself raises maps onto these.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;   // unreadable or malformed input data
inline constexpr int kExitDomainError = 3;  // readable input outside the domain
inline constexpr int kExitVerifyFailure = 4;

int run_cli(int argc, const char* const* argv);

// Same dispatch with the program name implied; convenient for tests.
int run_cli(const std::vector<std::string>& args);

}  // namespace kmdecomp
