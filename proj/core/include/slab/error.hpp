#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slab {

enum class ErrorCode {
  invalid_order,
  size_cap,
  ring_axiom,
  improper_quotient,
  module_action,
  not_an_isomorphism,
  ring_mismatch,
  disjointness,
  zero_in_mult_set,
  improper_ideal,
  invalid_element,
  theorem_violation,
  internal_invariant,
  syntax,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code so
/// the CLI can map it to an exit status and reports can name it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::syntax, message + " at position " + std::to_string(position)),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace slab
