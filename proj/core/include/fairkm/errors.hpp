#pragma once

#include <stdexcept>
#include <string>

namespace fairkm {

// Bad user input: parameters, unbalanced datasets, malformed configs.
// Maps to CLI exit code 2.
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// File system / parse failures. CLI exit code 3.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated internal invariant; always a bug somewhere upstream. CLI exit code 4.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An oracle instance exceeded its enumeration budget.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fairkm
