#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ditcalc::cli {

/// Parsed command line.
struct CliConfig {
    std::string subcommand;  // entropy, dist, compare, demo binary, demo coins, verify
    std::vector<std::string> inputs;
    double base = 2.0;
    bool json = false;
};

/// Values normally read from the process environment.
struct CliEnvironment {
    std::optional<std::string> base;  // DITCALC_BASE
};

CliEnvironment environment_from_process();

/// Runs one command. `args` excludes the program name.
/// Returns 0 on success, 1 when verification fails, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const CliEnvironment& env = {});

}  // namespace ditcalc::cli
