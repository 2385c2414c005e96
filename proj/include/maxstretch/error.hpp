#pragma once

#include <stdexcept>
#include <string>

namespace maxstretch {

// Failure categories surfaced by the library. The CLI maps these onto its
// exit-code vocabulary; tests match on them directly.
enum class errc {
  empty_input,
  dimension_mismatch,
  illegal_character,
  invalid_spec,
  domain,
  overflow,
  instance_too_large,
  insufficient_data,
  zero_metric,
  anchor_out_of_bounds,
  internal_mismatch,
  write_failure,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_input: return "empty-input";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::illegal_character: return "illegal-character";
    case errc::invalid_spec: return "invalid-spec";
    case errc::domain: return "domain-error";
    case errc::overflow: return "overflow-error";
    case errc::instance_too_large: return "instance-too-large";
    case errc::insufficient_data: return "insufficient-data";
    case errc::zero_metric: return "zero-metric";
    case errc::anchor_out_of_bounds: return "anchor-out-of-bounds";
    case errc::internal_mismatch: return "internal-mismatch";
    case errc::write_failure: return "write-failure";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace maxstretch
