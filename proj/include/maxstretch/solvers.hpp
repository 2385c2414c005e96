#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxstretch/error.hpp"
#include "maxstretch/matrix.hpp"

namespace maxstretch {

struct Coord {
  std::size_t row = 0;
  std::size_t col = 0;
  bool operator==(const Coord&) const = default;
};

// Deterministic instrumentation. Each solver engages only the counters that
// name its elementary steps; disengaged counters stay empty and are omitted
// from serialized records.
struct OpCounters {
  std::optional<std::uint64_t> cells_inspected;
  std::optional<std::uint64_t> submatrices_enumerated;
  std::optional<std::uint64_t> recursive_calls;
  std::optional<std::uint64_t> table_updates;
  std::optional<std::uint64_t> cache_hits;    // memoized solver only
  std::optional<std::uint64_t> cache_misses;  // memoized solver only

  bool operator==(const OpCounters&) const = default;
};

struct MaxSquareResult {
  std::size_t side = 0;
  std::optional<Coord> anchor;  // top-left corner of one witness; absent iff side == 0
  OpCounters counters;
};

inline constexpr std::size_t default_recursion_cap = 14;

// Enumerates every candidate square (size, top-left) and validates it cell by
// cell, abandoning a candidate at its first zero. No candidate is skipped, so
// submatrices_enumerated depends only on n.
inline MaxSquareResult solve_naive(const BinaryMatrix& m) {
  const std::size_t n = m.side();
  std::uint64_t submatrices = 0;
  std::uint64_t cells = 0;
  MaxSquareResult result;

  for (std::size_t size = 1; size <= n; ++size) {
    for (std::size_t top = 0; top + size <= n; ++top) {
      for (std::size_t left = 0; left + size <= n; ++left) {
        ++submatrices;
        bool valid = true;
        for (std::size_t i = top; valid && i < top + size; ++i) {
          for (std::size_t j = left; j < left + size; ++j) {
            ++cells;
            if (m.at(i, j) == 0) {
              valid = false;
              break;
            }
          }
        }
        if (valid && size > result.side) {
          result.side = size;
          result.anchor = Coord{top, left};
        }
      }
    }
  }
  result.counters.cells_inspected = cells;
  result.counters.submatrices_enumerated = submatrices;
  return result;
}

namespace detail {

struct PsiContext {
  const BinaryMatrix& m;
  std::size_t n;
  std::uint64_t calls = 0;
  std::uint64_t cells = 0;
};

// psi(i, j): side of the largest all-ones square with top-left corner (i, j),
// by plain recursion. Out-of-range and zero cells are genuine calls that
// return 0; all three children are always evaluated.
inline std::size_t psi_plain(PsiContext& ctx, std::size_t i, std::size_t j) {
  ++ctx.calls;
  if (i >= ctx.n || j >= ctx.n) return 0;
  ++ctx.cells;
  if (ctx.m.at(i, j) == 0) return 0;
  std::size_t down = psi_plain(ctx, i + 1, j);
  std::size_t right = psi_plain(ctx, i, j + 1);
  std::size_t diag = psi_plain(ctx, i + 1, j + 1);
  return 1 + std::min({down, right, diag});
}

struct MemoContext {
  const BinaryMatrix& m;
  std::size_t n;
  std::vector<std::int64_t> memo;  // (n+1)^2 slots over the padded domain, -1 = unset
  std::uint64_t calls = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t cells = 0;

  std::int64_t& slot(std::size_t i, std::size_t j) { return memo[i * (n + 1) + j]; }
};

inline std::size_t psi_memo(MemoContext& ctx, std::size_t i, std::size_t j) {
  ++ctx.calls;
  std::int64_t& cached = ctx.slot(i, j);
  if (cached >= 0) {
    ++ctx.hits;
    return static_cast<std::size_t>(cached);
  }
  ++ctx.misses;
  std::size_t value = 0;
  if (i < ctx.n && j < ctx.n) {
    ++ctx.cells;
    if (ctx.m.at(i, j) != 0) {
      std::size_t down = psi_memo(ctx, i + 1, j);
      std::size_t right = psi_memo(ctx, i, j + 1);
      std::size_t diag = psi_memo(ctx, i + 1, j + 1);
      value = 1 + std::min({down, right, diag});
    }
  }
  cached = static_cast<std::int64_t>(value);
  return value;
}

}  // namespace detail

// Plain recursion over psi for every start cell, no memoization. Guarded by a
// cap because the call count grows exponentially in n.
inline MaxSquareResult solve_recursive(const BinaryMatrix& m,
                                       std::size_t cap = default_recursion_cap) {
  const std::size_t n = m.side();
  if (n > cap)
    fail(errc::instance_too_large, "side " + std::to_string(n) + " exceeds the recursion cap " +
                                       std::to_string(cap));
  detail::PsiContext ctx{m, n};
  MaxSquareResult result;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t value = detail::psi_plain(ctx, i, j);
      if (value > result.side) {
        result.side = value;
        result.anchor = Coord{i, j};
      }
    }
  }
  result.counters.cells_inspected = ctx.cells;
  result.counters.recursive_calls = ctx.calls;
  return result;
}

// Same recurrence and the same answers as solve_recursive, but each psi value
// over the padded (n+1)^2 domain is computed once and cached.
inline MaxSquareResult solve_memoized(const BinaryMatrix& m) {
  const std::size_t n = m.side();
  detail::MemoContext ctx{m, n, std::vector<std::int64_t>((n + 1) * (n + 1), -1)};
  MaxSquareResult result;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t value = detail::psi_memo(ctx, i, j);
      if (value > result.side) {
        result.side = value;
        result.anchor = Coord{i, j};
      }
    }
  }
  result.counters.cells_inspected = ctx.cells;
  result.counters.recursive_calls = ctx.calls;
  result.counters.cache_hits = ctx.hits;
  result.counters.cache_misses = ctx.misses;
  return result;
}

// Bottom-up lookup table, one leading zero row and column of padding so the
// (i-1, j-1) reads never leave the table. Entry (i+1, j+1) holds the side of
// the largest all-ones square whose bottom-right corner is matrix cell (i, j).
class DPTable {
 public:
  explicit DPTable(std::size_t matrix_side)
      : dim_(matrix_side + 1), entries_(dim_ * dim_, 0) {}

  std::size_t dim() const noexcept { return dim_; }

  std::uint32_t entry(std::size_t i, std::size_t j) const {
    assert(i < dim_ && j < dim_);
    return entries_[i * dim_ + j];
  }

  std::uint32_t& entry(std::size_t i, std::size_t j) {
    assert(i < dim_ && j < dim_);
    return entries_[i * dim_ + j];
  }

 private:
  std::size_t dim_;
  std::vector<std::uint32_t> entries_;
};

// Row-major table fill; exactly one table write per matrix cell, so
// table_updates == n^2 on every instance. The table anchors squares at their
// bottom-right corner; the reported anchor is converted to top-left.
inline MaxSquareResult solve_dp(const BinaryMatrix& m, DPTable* table_out = nullptr) {
  const std::size_t n = m.side();
  DPTable table(n);
  std::uint64_t updates = 0;
  std::uint64_t cells = 0;
  std::size_t best = 0;
  Coord best_bottom_right;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++cells;
      std::uint32_t value = 0;
      if (m.at(i, j) != 0)
        value = std::min({table.entry(i, j + 1), table.entry(i + 1, j), table.entry(i, j)}) + 1;
      table.entry(i + 1, j + 1) = value;
      ++updates;
      if (value > best) {
        best = value;
        best_bottom_right = Coord{i, j};
      }
    }
  }

  MaxSquareResult result;
  result.side = best;
  if (best > 0)
    result.anchor = Coord{best_bottom_right.row - (best - 1), best_bottom_right.col - (best - 1)};
  result.counters.cells_inspected = cells;
  result.counters.table_updates = updates;
  if (table_out != nullptr) *table_out = std::move(table);
  return result;
}

struct WitnessCheck {
  bool ok = false;
  std::optional<Coord> zero_in_block;   // a zero inside the claimed block
  std::optional<Coord> larger_square;   // top-left of an all-ones (side+1)-square
};

namespace detail {

inline std::optional<Coord> find_zero_in_block(const BinaryMatrix& m, Coord anchor,
                                               std::size_t size) {
  for (std::size_t i = anchor.row; i < anchor.row + size; ++i)
    for (std::size_t j = anchor.col; j < anchor.col + size; ++j)
      if (m.at(i, j) == 0) return Coord{i, j};
  return std::nullopt;
}

}  // namespace detail

// Exhaustive check of a claimed result: the block at the anchor must be all
// ones and no square one size larger may exist anywhere.
inline WitnessCheck check_witness(const BinaryMatrix& m, const MaxSquareResult& claim) {
  const std::size_t n = m.side();
  if (claim.side > n)
    fail(errc::anchor_out_of_bounds,
         "claimed side " + std::to_string(claim.side) + " exceeds matrix side " +
             std::to_string(n));

  WitnessCheck check;
  if (claim.side > 0) {
    if (!claim.anchor)
      fail(errc::anchor_out_of_bounds, "claim with side >= 1 carries no anchor");
    const Coord a = *claim.anchor;
    if (a.row >= n || a.col >= n || a.row + claim.side > n || a.col + claim.side > n)
      fail(errc::anchor_out_of_bounds, "anchor (" + std::to_string(a.row) + "," +
                                           std::to_string(a.col) + ") with side " +
                                           std::to_string(claim.side) + " leaves the matrix");
    check.zero_in_block = detail::find_zero_in_block(m, a, claim.side);
    if (check.zero_in_block) return check;
  }

  const std::size_t bigger = claim.side + 1;
  if (bigger <= n) {
    for (std::size_t top = 0; top + bigger <= n; ++top) {
      for (std::size_t left = 0; left + bigger <= n; ++left) {
        if (!detail::find_zero_in_block(m, Coord{top, left}, bigger)) {
          check.larger_square = Coord{top, left};
          return check;
        }
      }
    }
  }
  check.ok = true;
  return check;
}

inline bool verify_witness(const BinaryMatrix& m, const MaxSquareResult& claim) {
  return check_witness(m, claim).ok;
}

// One-line record: `side=<m> anchor=<r>,<c> cells=<k> calls=<k> subs=<k>
// updates=<k>`, absent fields omitted.
inline std::string serialize_result(const MaxSquareResult& r) {
  std::string line = "side=" + std::to_string(r.side);
  if (r.anchor)
    line += " anchor=" + std::to_string(r.anchor->row) + "," + std::to_string(r.anchor->col);
  if (r.counters.cells_inspected)
    line += " cells=" + std::to_string(*r.counters.cells_inspected);
  if (r.counters.recursive_calls)
    line += " calls=" + std::to_string(*r.counters.recursive_calls);
  if (r.counters.submatrices_enumerated)
    line += " subs=" + std::to_string(*r.counters.submatrices_enumerated);
  if (r.counters.table_updates)
    line += " updates=" + std::to_string(*r.counters.table_updates);
  return line;
}

namespace detail {

inline std::uint64_t parse_u64_field(std::string_view text, std::string_view what) {
  if (text.empty()) fail(errc::illegal_character, std::string(what) + " value is empty");
  std::uint64_t value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9')
      fail(errc::illegal_character, std::string(what) + " value contains '" + std::string(1, ch) + "'");
    std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
    if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
      fail(errc::overflow, std::string(what) + " value does not fit in 64 bits");
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace detail

// Inverse of serialize_result; accepts the fields in any order.
inline MaxSquareResult parse_result_record(std::string_view line) {
  MaxSquareResult r;
  bool saw_side = false;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size()) break;
    std::size_t end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    std::string_view token = line.substr(pos, end - pos);
    pos = end;

    std::size_t eq = token.find('=');
    if (eq == std::string_view::npos)
      fail(errc::illegal_character, "record token '" + std::string(token) + "' has no '='");
    std::string_view key = token.substr(0, eq);
    std::string_view value = token.substr(eq + 1);

    if (key == "side") {
      r.side = detail::parse_u64_field(value, "side");
      saw_side = true;
    } else if (key == "anchor") {
      std::size_t comma = value.find(',');
      if (comma == std::string_view::npos)
        fail(errc::illegal_character, "anchor value lacks a comma");
      r.anchor = Coord{detail::parse_u64_field(value.substr(0, comma), "anchor row"),
                       detail::parse_u64_field(value.substr(comma + 1), "anchor col")};
    } else if (key == "cells") {
      r.counters.cells_inspected = detail::parse_u64_field(value, "cells");
    } else if (key == "calls") {
      r.counters.recursive_calls = detail::parse_u64_field(value, "calls");
    } else if (key == "subs") {
      r.counters.submatrices_enumerated = detail::parse_u64_field(value, "subs");
    } else if (key == "updates") {
      r.counters.table_updates = detail::parse_u64_field(value, "updates");
    } else {
      fail(errc::illegal_character, "unknown record key '" + std::string(key) + "'");
    }
  }
  if (!saw_side) fail(errc::illegal_character, "record has no side field");
  return r;
}

}  // namespace maxstretch
