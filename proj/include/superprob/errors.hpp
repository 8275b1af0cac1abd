#pragma once

#include <stdexcept>
#include <string>

namespace superprob {

/// Distinct failure conditions raised by the library. Every precondition
/// violation maps to exactly one code so callers can dispatch without
/// parsing messages.
enum class errc {
  duplicate_label,
  invalid_label,
  negative_probability,
  normalization,
  dimension_mismatch,
  out_of_range,
  empty_event,
  space_mismatch,
  conditioning_on_null,
  null_intersection,
  invalid_partition,
  invalid_matrix,
  internal_inconsistency,
  not_a_basis,
  singular_matrix,
  zero_vector,
  cap_exceeded,
  unknown_label,
  parse_error,
  unresolved_name,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }
  /// The message without the code prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  errc code_;
  std::string message_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace superprob
