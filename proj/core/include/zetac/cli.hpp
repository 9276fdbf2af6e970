#pragma once

#include <string>
#include <vector>

namespace zetac {

/// Outcome of one CLI invocation. Exit codes: 0 success, 1 domain error
/// (parse, evaluation, refused transformation), 2 usage error.
struct CommandResult {
    int exit_code = 0;
    std::string stdout_payload;
    std::string stderr_diagnostics;
};

/// Runs one zetac command (args exclude the program name). Pure except for
/// reading ZETA_DEFAULT_SCHEDULE from the environment and writing the
/// --out file of the plot command. Identical command lines produce
/// byte-identical payloads.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace zetac
