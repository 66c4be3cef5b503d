#pragma once

/// @file app.hpp
/// @brief The ramsum command-line front end as a callable entry point.

#include <cstdint>
#include <iosfwd>

namespace ramsum::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_mismatch = 1,
    exit_bad_input = 2,
    exit_arity = 3,
    exit_resource = 4,
};

/// Seed used by randomized subcommands when --seed is absent.
inline constexpr std::uint64_t default_seed = 12345;

/// Runs one command line. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ramsum::cli
