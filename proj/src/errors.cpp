#include "superprob/errors.hpp"

namespace superprob {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::duplicate_label: return "duplicate_label";
    case errc::invalid_label: return "invalid_label";
    case errc::negative_probability: return "negative_probability";
    case errc::normalization: return "normalization";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::out_of_range: return "out_of_range";
    case errc::empty_event: return "empty_event";
    case errc::space_mismatch: return "space_mismatch";
    case errc::conditioning_on_null: return "conditioning_on_null";
    case errc::null_intersection: return "null_intersection";
    case errc::invalid_partition: return "invalid_partition";
    case errc::invalid_matrix: return "invalid_matrix";
    case errc::internal_inconsistency: return "internal_inconsistency";
    case errc::not_a_basis: return "not_a_basis";
    case errc::singular_matrix: return "singular_matrix";
    case errc::zero_vector: return "zero_vector";
    case errc::cap_exceeded: return "cap_exceeded";
    case errc::unknown_label: return "unknown_label";
    case errc::parse_error: return "parse_error";
    case errc::unresolved_name: return "unresolved_name";
  }
  return "unknown";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace superprob
