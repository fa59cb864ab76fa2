#pragma once

// Helper for tests that drive the built CLI binary. FPC_CLI_PATH and
// FPC_DATA_DIR come in as compile definitions.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace cli {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_all(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("fpc_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

inline RunResult run(const std::string& args) {
    const auto out_path = scratch_dir() / "stdout.txt";
    const auto err_path = scratch_dir() / "stderr.txt";
    const std::string command = std::string("'") + FPC_CLI_PATH + "' " + args +
                                " >'" + out_path.string() + "' 2>'" +
                                err_path.string() + "'";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = read_all(out_path);
    result.err = read_all(err_path);
    return result;
}

inline std::string data_path(const std::string& name) {
    return std::string(FPC_DATA_DIR) + "/" + name;
}

}  // namespace cli
