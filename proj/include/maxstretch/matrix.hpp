#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "maxstretch/error.hpp"

namespace maxstretch {

// Immutable n-by-n grid of {0,1} cells, stored row-major, one byte per cell.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;

  BinaryMatrix(std::size_t n, std::vector<std::uint8_t> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_)
      fail(errc::dimension_mismatch, "cell count " + std::to_string(cells_.size()) +
                                         " does not match side " + std::to_string(n_));
    for (std::uint8_t c : cells_)
      if (c > 1) fail(errc::illegal_character, "cell value " + std::to_string(c) + " is not binary");
  }

  std::size_t side() const noexcept { return n_; }

  std::uint8_t at(std::size_t row, std::size_t col) const {
    assert(row < n_ && col < n_);
    return cells_[row * n_ + col];
  }

  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

  bool all_ones() const noexcept {
    for (std::uint8_t c : cells_)
      if (c == 0) return false;
    return true;
  }

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

// Test/bench convenience: build a matrix from row strings such as {"10", "01"}.
inline BinaryMatrix matrix_from_rows(std::initializer_list<std::string_view> rows) {
  std::size_t n = rows.size();
  std::vector<std::uint8_t> cells;
  cells.reserve(n * n);
  for (std::string_view row : rows) {
    if (row.size() != n) fail(errc::dimension_mismatch, "row length does not match row count");
    for (char ch : row) {
      if (ch != '0' && ch != '1') fail(errc::illegal_character, "row entry must be 0 or 1");
      cells.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
  }
  return BinaryMatrix(n, std::move(cells));
}

// Text format: first line is the decimal side n, then n rows of n digits from
// {0,1} with an optional single space between adjacent digits, each row ending
// in '\n'. Anything else is rejected.
inline BinaryMatrix parse_matrix(std::string_view text) {
  if (text.empty()) fail(errc::empty_input, "matrix stream is empty");

  std::size_t pos = text.find('\n');
  if (pos == std::string_view::npos)
    fail(errc::dimension_mismatch, "missing newline after the side line");
  std::string_view side_line = text.substr(0, pos);
  if (side_line.empty()) fail(errc::empty_input, "side line is empty");

  std::size_t n = 0;
  for (char ch : side_line) {
    if (ch < '0' || ch > '9')
      fail(errc::illegal_character, std::string("side line contains '") + ch + "'");
    std::size_t digit = static_cast<std::size_t>(ch - '0');
    if (n > (std::numeric_limits<std::size_t>::max() - digit) / 10)
      fail(errc::dimension_mismatch, "side does not fit in a machine word");
    n = n * 10 + digit;
  }
  if (n != 0 && n > std::numeric_limits<std::size_t>::max() / n)
    fail(errc::dimension_mismatch, "side " + std::to_string(n) + " is too large to represent");

  std::vector<std::uint8_t> cells;
  cells.reserve(n * n);
  std::size_t cursor = pos + 1;
  for (std::size_t row = 0; row < n; ++row) {
    std::size_t eol = text.find('\n', cursor);
    if (eol == std::string_view::npos) {
      if (cursor >= text.size())
        fail(errc::dimension_mismatch, "declared side " + std::to_string(n) + " but only " +
                                           std::to_string(row) + " rows present");
      fail(errc::dimension_mismatch, "row " + std::to_string(row) + " is not newline-terminated");
    }
    std::string_view line = text.substr(cursor, eol - cursor);
    cursor = eol + 1;

    std::size_t count = 0;
    bool expect_digit = true;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        cells.push_back(static_cast<std::uint8_t>(ch - '0'));
        ++count;
        expect_digit = false;
      } else if (ch == ' ') {
        if (expect_digit)
          fail(errc::illegal_character, "row " + std::to_string(row) + " has a misplaced space");
        expect_digit = true;  // a single space must be followed by a digit
      } else {
        fail(errc::illegal_character,
             "row " + std::to_string(row) + " contains '" + std::string(1, ch) + "'");
      }
    }
    if (expect_digit && count > 0)
      fail(errc::illegal_character, "row " + std::to_string(row) + " ends with a space");
    if (count != n)
      fail(errc::dimension_mismatch, "row " + std::to_string(row) + " has " +
                                         std::to_string(count) + " entries, expected " +
                                         std::to_string(n));
  }
  if (cursor != text.size())
    fail(errc::dimension_mismatch, "trailing content after the declared " + std::to_string(n) +
                                       " rows");
  return BinaryMatrix(n, std::move(cells));
}

inline BinaryMatrix parse_matrix(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
  return parse_matrix(std::string_view(text));
}

inline std::string serialize_matrix(const BinaryMatrix& m) {
  std::size_t n = m.side();
  std::string out = std::to_string(n);
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out += static_cast<char>('0' + m.at(i, j));
    out += '\n';
  }
  return out;
}

enum class GenKind { all_ones, all_zeros, identity, bernoulli, planted };

inline const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::all_ones: return "all-ones";
    case GenKind::all_zeros: return "all-zeros";
    case GenKind::identity: return "identity";
    case GenKind::bernoulli: return "bernoulli";
    case GenKind::planted: return "planted";
  }
  return "unknown";
}

// Recipe for a reproducible test instance. The same spec (seed included)
// always produces the same matrix, on every platform: cells are drawn from
// mt19937_64 in row-major order, one draw per cell, taking the top 53 bits
// against a fixed integer threshold. Standard-library distributions are
// avoided since their outputs are implementation-defined.
struct GeneratorSpec {
  GenKind kind = GenKind::all_zeros;
  std::size_t n = 0;
  double density = 0.0;       // bernoulli and planted background
  std::size_t planted_side = 0;  // planted only
  std::uint64_t seed = 0;

  void validate() const {
    if (!(density >= 0.0 && density <= 1.0))
      fail(errc::invalid_spec, "density must lie in [0,1]");
    if (planted_side > n)
      fail(errc::invalid_spec, "planted side " + std::to_string(planted_side) +
                                   " exceeds matrix side " + std::to_string(n));
  }
};

namespace detail {

constexpr std::uint64_t kDensityBits = std::uint64_t{1} << 53;

inline std::uint64_t density_threshold(double density) {
  return static_cast<std::uint64_t>(std::llround(density * static_cast<double>(kDensityBits)));
}

inline void fill_bernoulli(std::vector<std::uint8_t>& cells, std::mt19937_64& rng,
                           std::uint64_t threshold) {
  for (auto& cell : cells) cell = ((rng() >> 11) < threshold) ? 1 : 0;
}

}  // namespace detail

inline BinaryMatrix generate(const GeneratorSpec& spec) {
  spec.validate();
  std::size_t n = spec.n;
  std::vector<std::uint8_t> cells(n * n, 0);

  switch (spec.kind) {
    case GenKind::all_zeros:
      break;
    case GenKind::all_ones:
      cells.assign(n * n, 1);
      break;
    case GenKind::identity:
      for (std::size_t i = 0; i < n; ++i) cells[i * n + i] = 1;
      break;
    case GenKind::bernoulli: {
      std::mt19937_64 rng(spec.seed);
      detail::fill_bernoulli(cells, rng, detail::density_threshold(spec.density));
      break;
    }
    case GenKind::planted: {
      std::mt19937_64 rng(spec.seed);
      // Block position first, then the background, so the stream layout is fixed.
      std::size_t span = n - spec.planted_side + 1;
      std::size_t r0 = n == 0 ? 0 : static_cast<std::size_t>(rng() % span);
      std::size_t c0 = n == 0 ? 0 : static_cast<std::size_t>(rng() % span);
      detail::fill_bernoulli(cells, rng, detail::density_threshold(spec.density));
      for (std::size_t i = r0; i < r0 + spec.planted_side; ++i)
        for (std::size_t j = c0; j < c0 + spec.planted_side; ++j) cells[i * n + j] = 1;
      break;
    }
  }
  return BinaryMatrix(n, std::move(cells));
}

}  // namespace maxstretch
