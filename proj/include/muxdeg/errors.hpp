#pragma once

#include <stdexcept>
#include <string>

namespace muxdeg {

enum class ErrorKind {
    duplicate_layer,
    self_loop_forbidden,
    invalid_weight,
    not_found,
    io_failure,
    schema_mismatch,
    parse_failure,
    dimension_mismatch,
    invalid_argument,
    empty_input,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception. `kind()` tells callers (notably the CLI, which maps
/// input-class failures to exit code 2) what went wrong without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept
    {
        return kind_;
    }

    /// True when the failure was caused by user input or input files rather
    /// than an internal defect.
    bool is_input_error() const noexcept;

private:
    ErrorKind kind_;
};

} // namespace muxdeg
