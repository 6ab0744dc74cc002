#pragma once

// Minimal popen wrapper for driving the CLI binary from tests.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testsupport {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

// Runs `command` through the shell with stderr dropped; captures stdout.
inline RunResult run_command(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.stdout_text.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Path of the CLI binary under test, from MAGICSQ_BIN (set by ctest).
inline std::optional<std::string> cli_path() {
    const char* path = std::getenv("MAGICSQ_BIN");
    if (path == nullptr || *path == '\0') return std::nullopt;
    return std::string(path);
}

}  // namespace testsupport
