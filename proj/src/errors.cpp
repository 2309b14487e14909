#include "knotalg/errors.hpp"

namespace knotalg {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotIntertwining: return "NotIntertwining";
    case ErrorKind::NotNearProjection: return "NotNearProjection";
    case ErrorKind::InvalidPresentation: return "InvalidPresentation";
    case ErrorKind::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotNonsingularForm: return "NotNonsingularForm";
    case ErrorKind::WrongEta: return "WrongEta";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::InternalAssertion: return "InternalAssertion";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ShapeMismatch:
    case ErrorKind::RingMismatch:
    case ErrorKind::NotSquare:
    case ErrorKind::ParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace knotalg
