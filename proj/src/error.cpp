#include "tanglesig/error.hpp"

namespace tanglesig {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ColourMismatch: return "ColourMismatch";
    case ErrorKind::InvalidTangle: return "InvalidTangle";
    case ErrorKind::NotAnEndomorphism: return "NotAnEndomorphism";
    case ErrorKind::OmegaOnForbiddenLocus: return "OmegaOnForbiddenLocus";
    case ErrorKind::AdmissibilityViolated: return "AdmissibilityViolated";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NonUniqueForm: return "NonUniqueForm";
    case ErrorKind::TransposeSymmetryViolated: return "TransposeSymmetryViolated";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tanglesig
