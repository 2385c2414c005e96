#pragma once

#include <optional>
#include <utility>

#include "maxstretch/error.hpp"

namespace testutil {

// Runs f and reports the library error code it throws, if any.
template <class F>
std::optional<maxstretch::errc> code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const maxstretch::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace testutil
