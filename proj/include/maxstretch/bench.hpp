#pragma once

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "maxstretch/counting.hpp"
#include "maxstretch/error.hpp"
#include "maxstretch/matrix.hpp"
#include "maxstretch/solvers.hpp"

namespace maxstretch {

enum class SolverId { naive, recursive, memoized, dp };

inline constexpr SolverId all_solver_ids[] = {SolverId::naive, SolverId::recursive,
                                              SolverId::memoized, SolverId::dp};

inline const char* solver_name(SolverId id) {
  switch (id) {
    case SolverId::naive: return "naive";
    case SolverId::recursive: return "recursive";
    case SolverId::memoized: return "memoized";
    case SolverId::dp: return "dp";
  }
  return "unknown";
}

inline SolverId parse_solver(std::string_view name) {
  for (SolverId id : all_solver_ids)
    if (name == solver_name(id)) return id;
  fail(errc::invalid_spec, "unknown solver '" + std::string(name) + "'");
}

// One benchmark observation. Counters are identical across repetitions by
// determinism; run_sweep asserts that rather than assuming it.
struct BenchRecord {
  SolverId solver = SolverId::dp;
  std::size_t n = 0;
  double density = 0.0;
  std::uint64_t seed = 0;
  std::uint32_t reps = 0;
  std::uint64_t time_median_ns = 0;
  std::uint64_t time_min_ns = 0;
  OpCounters counters;
};

enum class Metric {
  time_median_ns,
  time_min_ns,
  cells_inspected,
  submatrices_enumerated,
  recursive_calls,
  table_updates,
};

inline const char* metric_name(Metric m) {
  switch (m) {
    case Metric::time_median_ns: return "time_median_ns";
    case Metric::time_min_ns: return "time_min_ns";
    case Metric::cells_inspected: return "cells_inspected";
    case Metric::submatrices_enumerated: return "submatrices_enumerated";
    case Metric::recursive_calls: return "recursive_calls";
    case Metric::table_updates: return "table_updates";
  }
  return "unknown";
}

inline std::optional<std::uint64_t> metric_value(const BenchRecord& r, Metric m) {
  switch (m) {
    case Metric::time_median_ns: return r.time_median_ns;
    case Metric::time_min_ns: return r.time_min_ns;
    case Metric::cells_inspected: return r.counters.cells_inspected;
    case Metric::submatrices_enumerated: return r.counters.submatrices_enumerated;
    case Metric::recursive_calls: return r.counters.recursive_calls;
    case Metric::table_updates: return r.counters.table_updates;
  }
  return std::nullopt;
}

struct SlopeEstimate {
  SolverId solver = SolverId::dp;
  double slope = 0.0;
  double r_squared = 0.0;
  Metric metric = Metric::time_median_ns;
};

struct SweepConfig {
  std::vector<SolverId> solvers;
  std::vector<std::size_t> sizes;  // strictly increasing
  GeneratorSpec gen;               // template; n and seed are filled per size
  std::uint32_t reps = 1;
  std::size_t recursion_cap = default_recursion_cap;
  bool force = false;  // run the recursive solver past its cap anyway
};

// Exact count of square candidates in an n-by-n grid: sum over sizes k of
// (n-k+1)^2, i.e. n(n+1)(2n+1)/6. Matches solve_naive's
// submatrices_enumerated on every instance of side n.
inline std::uint64_t square_count(std::uint64_t n) {
  if (n < 1) fail(errc::domain, "square_count requires n >= 1");
  u128 value = checked_mul(checked_mul(u128{n}, u128{n} + 1), 2 * u128{n} + 1) / 6;
  if (value > std::numeric_limits<std::uint64_t>::max())
    fail(errc::overflow, "square count does not fit in 64 bits");
  return static_cast<std::uint64_t>(value);
}

// Exact number of psi invocations solve_recursive makes, computed in O(n^2)
// by memoizing subtree call counts: a call on an out-of-range or zero cell
// costs 1, any other call costs 1 plus its three children.
inline u128 call_count_oracle(const BinaryMatrix& m) {
  const std::size_t n = m.side();
  std::vector<u128> subtree((n + 1) * (n + 1), 1);  // padded; borders stay 1
  auto at = [&](std::size_t i, std::size_t j) -> u128& { return subtree[i * (n + 1) + j]; };

  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      if (m.at(i, j) != 0) {
        u128 total = checked_add(at(i + 1, j), at(i, j + 1));
        total = checked_add(total, at(i + 1, j + 1));
        at(i, j) = checked_add(total, 1);
      }
    }
  }

  u128 total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total = checked_add(total, at(i, j));
  return total;
}

// Smallest positive step the monotonic clock can resolve, measured.
inline std::uint64_t probe_clock_resolution_ns() {
  using clock = std::chrono::steady_clock;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (int sample = 0; sample < 16; ++sample) {
    auto start = clock::now();
    auto next = start;
    while (next == start) next = clock::now();
    auto delta =
        static_cast<std::uint64_t>(std::chrono::nanoseconds(next - start).count());
    best = std::min(best, delta);
  }
  return best;
}

inline bool timing_reliable() { return probe_clock_resolution_ns() <= 1'000; }

namespace detail {

inline MaxSquareResult run_solver(SolverId id, const BinaryMatrix& m, const SweepConfig& cfg) {
  switch (id) {
    case SolverId::naive: return solve_naive(m);
    case SolverId::recursive:
      return solve_recursive(m, cfg.force ? std::numeric_limits<std::size_t>::max()
                                          : cfg.recursion_cap);
    case SolverId::memoized: return solve_memoized(m);
    case SolverId::dp: return solve_dp(m);
  }
  fail(errc::invalid_spec, "unknown solver id");
}

inline double record_density(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GenKind::all_ones: return 1.0;
    case GenKind::all_zeros: return 0.0;
    case GenKind::identity: return 0.0;
    case GenKind::bernoulli:
    case GenKind::planted: return spec.density;
  }
  return 0.0;
}

}  // namespace detail

// Runs every requested solver on the same seeded instance per size. Wall time
// wraps the solve call only; one untimed warm-up run precedes the timed reps,
// and counters must repeat exactly across reps. Records come out sorted by
// solver, then n.
inline std::vector<BenchRecord> run_sweep(const SweepConfig& cfg) {
  if (cfg.solvers.empty() || cfg.sizes.empty())
    fail(errc::empty_input, "sweep needs at least one solver and one size");
  for (std::size_t i = 1; i < cfg.sizes.size(); ++i)
    if (cfg.sizes[i] <= cfg.sizes[i - 1])
      fail(errc::invalid_spec, "sizes must be strictly increasing");
  if (cfg.reps < 1) fail(errc::invalid_spec, "reps must be at least 1");
  if (!cfg.force)
    for (SolverId id : cfg.solvers)
      if (id == SolverId::recursive && cfg.sizes.back() > cfg.recursion_cap)
        fail(errc::instance_too_large,
             "size " + std::to_string(cfg.sizes.back()) + " exceeds the recursion cap " +
                 std::to_string(cfg.recursion_cap) + " (use force to override)");

  // Paired instances: one matrix per size, shared by all solvers.
  std::vector<BinaryMatrix> instances;
  std::vector<GeneratorSpec> specs;
  instances.reserve(cfg.sizes.size());
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
    GeneratorSpec spec = cfg.gen;
    spec.n = cfg.sizes[i];
    spec.seed = cfg.gen.seed + i;
    instances.push_back(generate(spec));
    specs.push_back(spec);
  }

  std::vector<std::size_t> agreed_side(cfg.sizes.size(), 0);
  std::vector<bool> side_known(cfg.sizes.size(), false);

  std::vector<SolverId> order;
  for (SolverId id : all_solver_ids)
    if (std::find(cfg.solvers.begin(), cfg.solvers.end(), id) != cfg.solvers.end())
      order.push_back(id);

  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (SolverId id : order) {
    for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
      const BinaryMatrix& instance = instances[i];
      MaxSquareResult warm = detail::run_solver(id, instance, cfg);

      std::vector<std::uint64_t> times;
      times.reserve(cfg.reps);
      for (std::uint32_t rep = 0; rep < cfg.reps; ++rep) {
        auto start = clock::now();
        MaxSquareResult timed = detail::run_solver(id, instance, cfg);
        auto stop = clock::now();
        times.push_back(
            static_cast<std::uint64_t>(std::chrono::nanoseconds(stop - start).count()));
        if (timed.side != warm.side || !(timed.counters == warm.counters))
          fail(errc::internal_mismatch,
               std::string(solver_name(id)) + " was not deterministic across repetitions at n=" +
                   std::to_string(cfg.sizes[i]));
      }
      std::sort(times.begin(), times.end());
      std::uint64_t median = times.size() % 2 == 1
                                 ? times[times.size() / 2]
                                 : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2;

      if (side_known[i] && warm.side != agreed_side[i])
        fail(errc::internal_mismatch,
             std::string(solver_name(id)) + " disagrees on side at n=" +
                 std::to_string(cfg.sizes[i]));
      agreed_side[i] = warm.side;
      side_known[i] = true;

      BenchRecord record;
      record.solver = id;
      record.n = cfg.sizes[i];
      record.density = detail::record_density(specs[i]);
      record.seed = specs[i].seed;
      record.reps = cfg.reps;
      record.time_median_ns = median;
      record.time_min_ns = times.front();
      record.counters = warm.counters;
      records.push_back(record);
    }
  }
  return records;
}

// Ordinary least squares of log(metric) against log(n).
inline SlopeEstimate fit_growth(const std::vector<BenchRecord>& records, Metric metric) {
  if (records.empty()) fail(errc::insufficient_data, "no records to fit");
  SolverId solver = records.front().solver;
  std::vector<double> xs, ys;
  std::vector<std::size_t> seen_n;
  for (const BenchRecord& r : records) {
    if (r.solver != solver)
      fail(errc::invalid_spec, "fit_growth expects records for a single solver");
    if (std::find(seen_n.begin(), seen_n.end(), r.n) != seen_n.end()) continue;
    seen_n.push_back(r.n);
    auto value = metric_value(r, metric);
    if (!value || *value == 0)
      fail(errc::zero_metric, std::string(metric_name(metric)) + " is zero or absent at n=" +
                                  std::to_string(r.n));
    if (r.n == 0) fail(errc::zero_metric, "log(n) undefined at n=0");
    xs.push_back(std::log(static_cast<double>(r.n)));
    ys.push_back(std::log(static_cast<double>(*value)));
  }
  if (xs.size() < 4)
    fail(errc::insufficient_data, "growth fit needs at least 4 distinct sizes, got " +
                                      std::to_string(xs.size()));

  double mean_x = 0, mean_y = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= static_cast<double>(xs.size());
  mean_y /= static_cast<double>(xs.size());

  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  double slope = sxy / sxx;
  double intercept = mean_y - slope * mean_x;

  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double predicted = intercept + slope * xs[i];
    ss_res += (ys[i] - predicted) * (ys[i] - predicted);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  double r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;

  return SlopeEstimate{solver, slope, r_squared, metric};
}

inline constexpr std::string_view csv_header =
    "solver,n,density,seed,reps,time_median_ns,time_min_ns,cells_inspected,"
    "submatrices_enumerated,recursive_calls,table_updates";

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) fail(errc::write_failure, "cannot format a real value");
  return std::string(buf, end);
}

inline std::string format_counter(const std::optional<std::uint64_t>& c) {
  return c ? std::to_string(*c) : std::string();
}

}  // namespace detail

// One CSV row per record, sorted by solver then n. Counters a solver does not
// engage serialize as empty fields.
inline void emit_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  std::vector<BenchRecord> sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(), [](const BenchRecord& a, const BenchRecord& b) {
    if (a.solver != b.solver) return static_cast<int>(a.solver) < static_cast<int>(b.solver);
    return a.n < b.n;
  });

  out << csv_header << '\n';
  for (const BenchRecord& r : sorted) {
    out << solver_name(r.solver) << ',' << r.n << ',' << detail::format_double(r.density) << ','
        << r.seed << ',' << r.reps << ',' << r.time_median_ns << ',' << r.time_min_ns << ','
        << detail::format_counter(r.counters.cells_inspected) << ','
        << detail::format_counter(r.counters.submatrices_enumerated) << ','
        << detail::format_counter(r.counters.recursive_calls) << ','
        << detail::format_counter(r.counters.table_updates) << '\n';
  }
  if (!out) fail(errc::write_failure, "CSV stream write failed");
}

inline void append_slope_comment(const SlopeEstimate& est, std::ostream& out) {
  out << "#slope," << solver_name(est.solver) << ',' << metric_name(est.metric) << ','
      << detail::format_double(est.slope) << ',' << detail::format_double(est.r_squared) << '\n';
  if (!out) fail(errc::write_failure, "CSV stream write failed");
}

namespace detail {

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

inline std::optional<std::uint64_t> parse_optional_counter(std::string_view field) {
  if (field.empty()) return std::nullopt;
  return parse_u64_field(field, "counter");
}

inline double parse_double_field(std::string_view field) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    fail(errc::illegal_character, "malformed real value '" + std::string(field) + "'");
  return value;
}

}  // namespace detail

// Reads back emit_csv output; '#' comment lines are skipped.
inline std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(errc::empty_input, "CSV stream is empty");
  if (line != csv_header) fail(errc::illegal_character, "unexpected CSV header");

  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    auto fields = detail::split_csv_line(line);
    if (fields.size() != 11)
      fail(errc::dimension_mismatch, "CSV row has " + std::to_string(fields.size()) +
                                         " fields, expected 11");
    BenchRecord r;
    r.solver = parse_solver(fields[0]);
    r.n = detail::parse_u64_field(fields[1], "n");
    r.density = detail::parse_double_field(fields[2]);
    r.seed = detail::parse_u64_field(fields[3], "seed");
    r.reps = static_cast<std::uint32_t>(detail::parse_u64_field(fields[4], "reps"));
    r.time_median_ns = detail::parse_u64_field(fields[5], "time_median_ns");
    r.time_min_ns = detail::parse_u64_field(fields[6], "time_min_ns");
    r.counters.cells_inspected = detail::parse_optional_counter(fields[7]);
    r.counters.submatrices_enumerated = detail::parse_optional_counter(fields[8]);
    r.counters.recursive_calls = detail::parse_optional_counter(fields[9]);
    r.counters.table_updates = detail::parse_optional_counter(fields[10]);
    records.push_back(r);
  }
  return records;
}

}  // namespace maxstretch
