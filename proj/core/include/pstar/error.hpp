#pragma once

#include <stdexcept>
#include <string>

namespace pstar {

enum class errc {
  parse_error,
  malformed_input,
  non_hermitian,
  not_positive,
  undefined_product,
  no_unit,
  not_representable,
  precore_violation,
  not_core,
  not_nested,
  not_universal_multiplier,
  not_an_algebra,
  dimension_mismatch,
  validation_failure,
  internal,
};

const char* errc_name(errc code);

/// Exception carrying an error category alongside the message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::parse_error: return "ParseError";
    case errc::malformed_input: return "MalformedInput";
    case errc::non_hermitian: return "NonHermitian";
    case errc::not_positive: return "NotPositive";
    case errc::undefined_product: return "UndefinedProduct";
    case errc::no_unit: return "NoUnit";
    case errc::not_representable: return "NotRepresentable";
    case errc::precore_violation: return "PrecoreViolation";
    case errc::not_core: return "NotCore";
    case errc::not_nested: return "NotNested";
    case errc::not_universal_multiplier: return "NotUniversalMultiplier";
    case errc::not_an_algebra: return "NotAnAlgebra";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::validation_failure: return "ValidationFailure";
    case errc::internal: return "InternalError";
  }
  return "Error";
}

}  // namespace pstar
