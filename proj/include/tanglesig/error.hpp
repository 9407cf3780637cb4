#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tanglesig {

enum class ErrorKind {
  ColourMismatch,
  InvalidTangle,
  NotAnEndomorphism,
  OmegaOnForbiddenLocus,
  AdmissibilityViolated,
  NotHermitian,
  IllConditioned,
  NotIsotropic,
  DecompositionFailed,
  NotUnitary,
  SpaceMismatch,
  NonUniqueForm,
  TransposeSymmetryViolated,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tanglesig
