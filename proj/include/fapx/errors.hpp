#pragma once

// Error taxonomy shared by the library and the command-line tool.

#include <stdexcept>
#include <string>

namespace fapx {

// Malformed instance, graph, or rational text. The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Out-of-range or inconsistent call parameter (eps, t, k, capacity, ...).
// The CLI maps this to exit code 2 as well.
struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact oracle refused to run because the instance exceeds its exhaustive
// search budget. The CLI maps this to exit code 3.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fapx
