#ifndef ACTIONGRAPH_TESTS_SUPPORT_PROCESS_HPP
#define ACTIONGRAPH_TESTS_SUPPORT_PROCESS_HPP

// Minimal shell-out helper for driving the CLI binary from tests.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testsupport {

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline CommandResult run_command(const std::string& command) {
    static int counter = 0;
    const std::string base = ".cli_capture_" + std::to_string(++counter);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";

    const int status = std::system((command + " >" + out_path + " 2>" + err_path).c_str());

    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

}  // namespace testsupport

#endif  // ACTIONGRAPH_TESTS_SUPPORT_PROCESS_HPP
