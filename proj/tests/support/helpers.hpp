// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace boir::test {

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(BOIR_FIXTURE_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void spit(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

/// Unique scratch directory removed on destruction.
struct TempDir {
    std::filesystem::path dir;

    explicit TempDir(const std::string& prefix = "boir_test") {
        static std::atomic<unsigned> counter{0};
        const unsigned n = counter.fetch_add(1);
        dir = std::filesystem::temp_directory_path() /
              (prefix + "_" + std::to_string(::getpid()) + "_" + std::to_string(n));
        std::filesystem::create_directories(dir);
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(dir, ec);
    }

    std::filesystem::path operator/(const std::string& name) const { return dir / name; }
};

}  // namespace boir::test
