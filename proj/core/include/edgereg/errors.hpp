#pragma once

#include <stdexcept>
#include <string>

namespace edgereg {

// a configured size/feasibility limit was exceeded; message names the limit and the observed value
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// malformed external input (graph6 bytes, edge-list text)
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// a precondition on an argument was violated (bad family params, non-matching edge set, ...)
struct argument_error : std::invalid_argument {
    explicit argument_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// an internal mathematical invariant failed; always a bug or a falsified assumption, never user error
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace edgereg
