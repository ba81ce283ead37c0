#pragma once

#include <iosfwd>

namespace rxnkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

inline constexpr unsigned long long kDefaultSeed = 42;

// Parses argv, runs one subcommand, writes JSON to `out` and diagnostics to
// `err`. Returns 0 on success, 1 on usage errors, 2 on data errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rxnkit::cli
