#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

// Invalid input / precondition violation. The CLI maps this to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource limit was exceeded. CLI exit code 3.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace hopf
