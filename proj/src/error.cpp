#include "msc/error.hpp"

namespace msc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::MixedFields: return "MixedFields";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotInA0: return "NotInA0";
        case ErrorKind::PSingular: return "PSingular";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::FieldTooSmall: return "FieldTooSmall";
        case ErrorKind::ConstructionFailed: return "ConstructionFailed";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

bool is_domain_refusal(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotInA0:
        case ErrorKind::PSingular:
        case ErrorKind::TooLarge:
        case ErrorKind::FieldTooSmall:
        case ErrorKind::ConstructionFailed:
            return true;
        default:
            return false;
    }
}

}  // namespace msc
