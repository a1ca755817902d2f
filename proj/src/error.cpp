#include "skewlab/error.hpp"

namespace skewlab {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::NotRibbon: return "NotRibbon";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::ProtrusionFailure: return "ProtrusionFailure";
    case ErrorKind::NotDefined: return "NotDefined";
    case ErrorKind::IntersectionUndefined: return "IntersectionUndefined";
    case ErrorKind::TrivialIntersection: return "TrivialIntersection";
    case ErrorKind::InvalidNesting: return "InvalidNesting";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::WeightMismatch: return "WeightMismatch";
    case ErrorKind::FixtureMismatch: return "FixtureMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace skewlab
