#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clonesub::cli {

/// Exit codes of every subcommand that answers a subsumption question.
inline constexpr int kSubsumed = 0;
inline constexpr int kNotSubsumed = 1;
inline constexpr int kError = 2;

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace clonesub::cli
