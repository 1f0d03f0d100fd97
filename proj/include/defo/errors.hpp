#pragma once

#include <stdexcept>
#include <string>

namespace defo {

// bad user input (malformed file, non-integer data, unknown option)
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// input is well-formed but violates a mathematical hypothesis
// (non-primitive R, cone not smooth in codimension two, ...)
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& msg) : std::runtime_error(msg) {}
};

// a "cannot happen" condition; indicates a bug
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace defo
