#pragma once

#include "ptrans/partitions.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ptrans::cli {

enum class Command { check, profile, dist, chartable, construct, closure, orbits, divisibility, scheme };

enum class ExitCode : int { ok = 0, input_error = 1, budget_exhausted = 2, internal_error = 3 };

/// One fully parsed invocation.
struct RunConfig {
    Command command = Command::check;
    std::string subcommand; // construct: design | agl-halved | group

    // inputs
    std::string perms_path;
    std::string gens_path;
    std::string design_path;
    std::string bij_path;
    std::string d1_spec; // sym:K, alt:K or file:PATH
    std::string d2_spec;
    std::optional<Partition> lambda;
    std::string method = "character"; // oracle | character | orbit | both
    bool assume_group = false;

    // scalar arguments
    std::optional<int> n;
    std::optional<std::string> size;
    std::optional<int> q;
    std::string kind;
    std::optional<std::string> half_set;
    std::string scheme_mode = "split-basis"; // split-basis | krein | idempotents

    // caps
    int max_n = 12;
    int matrix_cap = 5;
    std::size_t closure_cap = 1'000'000;
    std::uint64_t oracle_budget = 2'000'000'000;

    bool json = false;
};

/// Runs one computation, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ptrans::cli
