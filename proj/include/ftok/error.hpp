#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftok {

enum class Errc {
  non_invertible_substitution,
  non_square_matrix,
  parse_error,
  invalid_shape,
  mu_too_long,
  invalid_shape_for_kind,
  shape_mismatch,
  invalid_tableau,
  malformed_family,
  intersecting_paths,
  invalid_pattern,
  invalid_asm,
  bad_params,
  bad_config,
  io_error,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::non_invertible_substitution: return "NonInvertibleSubstitution";
    case Errc::non_square_matrix: return "NonSquareMatrix";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_shape: return "InvalidShape";
    case Errc::mu_too_long: return "MuTooLong";
    case Errc::invalid_shape_for_kind: return "InvalidShapeForKind";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::invalid_tableau: return "InvalidTableau";
    case Errc::malformed_family: return "MalformedFamily";
    case Errc::intersecting_paths: return "IntersectingPaths";
    case Errc::invalid_pattern: return "InvalidPattern";
    case Errc::invalid_asm: return "InvalidASM";
    case Errc::bad_params: return "BadParams";
    case Errc::bad_config: return "BadConfig";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the `Errc` codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ftok
