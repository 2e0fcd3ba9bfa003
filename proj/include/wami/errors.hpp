#pragma once

#include <stdexcept>
#include <string>

namespace wami {

// Bad operation parameter (thresholds out of order, even median window, ...).
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A scheme requiring ground-truth statistics was applied without them.
struct ContextError : std::runtime_error {
    explicit ContextError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file content (bad netpbm header, non-integer CSV field, ...).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failure (missing file, unwritable path).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wami
