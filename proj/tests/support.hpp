#pragma once

#include "abfold/io.hpp"

#include <atomic>
#include <filesystem>
#include <string>
#include <unistd.h>

inline std::string fixture_path(const std::string& name)
{
    return std::string(ABFOLD_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name)
{
    return abfold::read_text_file(fixture_path(name));
}

// Fresh directory under the system temp dir, removed on scope exit.
class ScratchDir {
public:
    ScratchDir()
    {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path()
            / ("abfold_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~ScratchDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};
