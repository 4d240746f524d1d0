#include "muxdeg/errors.hpp"

namespace muxdeg {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::duplicate_layer:
        return "DuplicateLayer";
    case ErrorKind::self_loop_forbidden:
        return "SelfLoopForbidden";
    case ErrorKind::invalid_weight:
        return "InvalidWeight";
    case ErrorKind::not_found:
        return "NotFound";
    case ErrorKind::io_failure:
        return "IoFailure";
    case ErrorKind::schema_mismatch:
        return "SchemaMismatch";
    case ErrorKind::parse_failure:
        return "ParseFailure";
    case ErrorKind::dimension_mismatch:
        return "DimensionMismatch";
    case ErrorKind::invalid_argument:
        return "InvalidArgument";
    case ErrorKind::empty_input:
        return "EmptyInput";
    }
    return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

bool Error::is_input_error() const noexcept
{
    return kind_ != ErrorKind::dimension_mismatch;
}

} // namespace muxdeg
