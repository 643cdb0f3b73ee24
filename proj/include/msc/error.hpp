#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace msc {

enum class ErrorKind {
    InvalidArgument,
    MixedFields,
    DivisionByZero,
    DimensionMismatch,
    NotSquare,
    Singular,
    IndexOutOfRange,
    NotInA0,
    PSingular,
    TooLarge,
    FieldTooSmall,
    ConstructionFailed,
    ParseError,
    FieldMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Refusals that come from the mathematics rather than from misuse.
bool is_domain_refusal(ErrorKind kind) noexcept;

}  // namespace msc
