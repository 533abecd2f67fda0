#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bosonic/combinatorics.hpp"

namespace bosonic {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses "fock:a,b,...".
Occupation parse_occupation(const std::string& text);

/// Runs the tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bosonic
