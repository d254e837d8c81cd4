#include "spawn.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace spawn {
namespace {

std::filesystem::path unique_path(const std::string& prefix) {
    static std::atomic<unsigned> counter{0};
    const unsigned n = counter++;
    return std::filesystem::temp_directory_path() /
           (prefix + "-" + std::to_string(::getpid()) + "-" + std::to_string(n));
}

}  // namespace

RunResult run(const std::string& command) {
    const std::filesystem::path dir = make_temp_dir("spawn");
    const std::filesystem::path out_file = dir / "out";
    const std::filesystem::path err_file = dir / "err";

    const std::string full =
        command + " >" + quoted(out_file) + " 2>" + quoted(err_file);
    const int status = std::system(full.c_str());

    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = read_text(out_file);
    result.err = read_text(err_file);
    std::filesystem::remove_all(dir);
    return result;
}

std::filesystem::path make_temp_dir(const std::string& prefix) {
    const std::filesystem::path dir = unique_path(prefix);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return {};
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot create " + path.string());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

std::string quoted(const std::filesystem::path& path) {
    std::string quoted = "'";
    for (char c : path.string()) {
        if (c == '\'') {
            quoted += "'\\''";
        } else {
            quoted += c;
        }
    }
    quoted += "'";
    return quoted;
}

}  // namespace spawn
