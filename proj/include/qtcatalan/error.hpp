#pragma once

#include <stdexcept>
#include <string>

namespace qtcatalan {

enum class errc {
  unbalanced_steps,
  below_diagonal,
  bad_character,
  invalid_area_sequence,
  empty_path,
  ambiguous_backtrack,
  ambiguous_selection,
  internal_invariant_violation,
  not_in_image,
  not_divisible,
  not_connected,
  unsupported_size,
  unknown_identity,
  bad_format,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::unbalanced_steps: return "UnbalancedSteps";
    case errc::below_diagonal: return "BelowDiagonal";
    case errc::bad_character: return "BadCharacter";
    case errc::invalid_area_sequence: return "InvalidAreaSequence";
    case errc::empty_path: return "EmptyPath";
    case errc::ambiguous_backtrack: return "AmbiguousBacktrack";
    case errc::ambiguous_selection: return "AmbiguousSelection";
    case errc::internal_invariant_violation: return "InternalInvariantViolation";
    case errc::not_in_image: return "NotInImage";
    case errc::not_divisible: return "NotDivisible";
    case errc::not_connected: return "NotConnected";
    case errc::unsupported_size: return "UnsupportedSize";
    case errc::unknown_identity: return "UnknownIdentity";
    case errc::bad_format: return "BadFormat";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace qtcatalan
