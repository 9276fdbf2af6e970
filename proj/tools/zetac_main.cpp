#include <cstdio>
#include <string>
#include <vector>

#include "zetac/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const zetac::CommandResult result = zetac::run_cli(args);
    if (!result.stdout_payload.empty()) {
        std::fwrite(result.stdout_payload.data(), 1, result.stdout_payload.size(), stdout);
    }
    if (!result.stderr_diagnostics.empty()) {
        std::fwrite(result.stderr_diagnostics.data(), 1, result.stderr_diagnostics.size(),
                    stderr);
    }
    return result.exit_code;
}
