#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewlab {

enum class ErrorKind {
    NotSkew,
    NotRibbon,
    Disconnected,
    ProtrusionFailure,
    NotDefined,
    IntersectionUndefined,
    TrivialIntersection,
    InvalidNesting,
    InvalidDecomposition,
    WeightMismatch,
    FixtureMismatch,
    ParseError,
    InvalidArgument,
};

std::string_view error_name(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type; the
// kind carries the machine-readable name used by the CLI.
class SkewError : public std::runtime_error {
public:
    SkewError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw SkewError(kind, message);
}

} // namespace skewlab
