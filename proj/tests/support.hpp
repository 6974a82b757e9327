#pragma once

#include "lexont/store.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <unistd.h>

namespace testsupport {

inline std::filesystem::path data_dir() { return std::filesystem::path(LEXONT_DATA_DIR); }

inline lexont::Snapshot load_fixture(const std::string& name) {
    return lexont::load_jsonl(data_dir() / "fixtures" / name);
}

// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("lexont_test_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

// Saves one environment variable and restores it on scope exit.
class EnvGuard {
public:
    explicit EnvGuard(const char* key) : key_(key) {
        const char* value = std::getenv(key);
        if (value) saved_ = value;
    }
    ~EnvGuard() {
        if (saved_) {
            ::setenv(key_, saved_->c_str(), 1);
        } else {
            ::unsetenv(key_);
        }
    }
    EnvGuard(const EnvGuard&) = delete;
    EnvGuard& operator=(const EnvGuard&) = delete;

    void set(const std::string& value) { ::setenv(key_, value.c_str(), 1); }
    void clear() { ::unsetenv(key_); }

private:
    const char* key_;
    std::optional<std::string> saved_;
};

} // namespace testsupport
