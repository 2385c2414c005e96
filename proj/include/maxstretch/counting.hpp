#pragma once

#include <cstdint>
#include <string>

#include "maxstretch/error.hpp"

namespace maxstretch {

// Exact 128-bit unsigned arithmetic for submatrix counts and call counts.
// Counts are integers by contract; floating point is never used here.
using u128 = unsigned __int128;

inline u128 checked_add(u128 a, u128 b) {
  u128 r = a + b;
  if (r < a) fail(errc::overflow, "count exceeds 128 bits in addition");
  return r;
}

inline u128 checked_mul(u128 a, u128 b) {
  if (a != 0 && b > ~u128{0} / a) fail(errc::overflow, "count exceeds 128 bits in multiplication");
  return a * b;
}

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace maxstretch
