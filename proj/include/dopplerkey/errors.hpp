#pragma once

#include <stdexcept>
#include <string>

namespace dopplerkey {

// Invalid or inconsistent scenario configuration.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to converge or produced a non-finite result.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// File output could not be produced.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dopplerkey
