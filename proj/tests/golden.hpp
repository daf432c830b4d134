#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Compares text against tests/golden/<name>. With SWINGLAT_UPDATE_GOLDEN set
// the file is rewritten instead and the comparison always passes.
namespace golden {

inline std::filesystem::path path(const std::string& name) { return std::filesystem::path(SWINGLAT_GOLDEN_DIR) / name; }

inline std::string read(const std::string& name) {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline bool matches(const std::string& name, const std::string& actual) {
    if (std::getenv("SWINGLAT_UPDATE_GOLDEN")) {
        std::ofstream(path(name), std::ios::binary) << actual;
        return true;
    }
    return read(name) == actual;
}

} // namespace golden
