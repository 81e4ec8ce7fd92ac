#pragma once

#include <stdexcept>
#include <string>

namespace aitv {

// Error categories mirrored by the CLI exit codes: io_error -> 1,
// config_error -> 2, solver_error -> 3.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace aitv
