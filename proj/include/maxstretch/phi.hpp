#pragma once

#include <cstdint>

#include "maxstretch/counting.hpp"
#include "maxstretch/error.hpp"

namespace maxstretch {

// Counts of contiguous rectangular submatrices of an m-by-n grid, computed
// three ways that must agree: the recurrence, its closed form, and direct
// enumeration. All arithmetic is exact and overflow-checked.

enum class CountMethod { recursive, closed_form, enumeration };

inline const char* count_method_name(CountMethod m) {
  switch (m) {
    case CountMethod::recursive: return "recursive";
    case CountMethod::closed_form: return "closed-form";
    case CountMethod::enumeration: return "enumeration";
  }
  return "unknown";
}

struct CountResult {
  u128 value = 0;
  CountMethod method = CountMethod::closed_form;
};

namespace detail {

// Triangular number 1 + 2 + ... + k, exact.
inline u128 triangular(std::uint64_t k) {
  u128 a = k, b = u128{k} + 1;
  if (k % 2 == 0)
    a /= 2;
  else
    b /= 2;
  return checked_mul(a, b);
}

}  // namespace detail

// Base case: the count for a single row or column of length lambda.
inline u128 phi_base(std::uint64_t lambda) {
  if (lambda < 1) fail(errc::domain, "phi_base requires lambda >= 1");
  return detail::triangular(lambda);
}

// Recurrence phi(m, n) = phi(m, n-1) + n * (1 + ... + m), grounded in the
// base case above, accumulated from n = 1 upward.
inline u128 phi_recursive(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) fail(errc::domain, "phi_recursive requires m, n >= 1");
  u128 width_one = phi_base(m);
  u128 total = width_one;  // phi(m, 1)
  for (std::uint64_t k = 2; k <= n; ++k)
    total = checked_add(total, checked_mul(u128{k}, width_one));
  return total;
}

// Closed form (1 + ... + n)(1 + ... + m); for m = n this is n^2 (n+1)^2 / 4.
inline u128 phi_closed(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) fail(errc::domain, "phi_closed requires m, n >= 1");
  return checked_mul(detail::triangular(n), detail::triangular(m));
}

inline constexpr std::uint64_t enumeration_guard = 10'000;  // max m * n

// Independent oracle: walk every (top, left, height, width) choice and count.
inline u128 count_by_enumeration(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) fail(errc::domain, "count_by_enumeration requires m, n >= 1");
  if (m > enumeration_guard / n)
    fail(errc::instance_too_large, "enumeration guard allows m * n <= " +
                                       std::to_string(enumeration_guard));
  u128 count = 0;
  for (std::uint64_t top = 0; top < m; ++top)
    for (std::uint64_t height = 1; height <= m - top; ++height)
      for (std::uint64_t left = 0; left < n; ++left)
        for (std::uint64_t width = 1; width <= n - left; ++width) ++count;
  return count;
}

}  // namespace maxstretch
