#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "maxstretch/bench.hpp"
#include "test_util.hpp"

using namespace maxstretch;
using testutil::code_of;

namespace {

SweepConfig sweep_of(std::vector<SolverId> solvers, std::vector<std::size_t> sizes,
                     GenKind kind, double density, std::uint64_t seed, std::uint32_t reps) {
  SweepConfig cfg;
  cfg.solvers = std::move(solvers);
  cfg.sizes = std::move(sizes);
  cfg.gen.kind = kind;
  cfg.gen.density = density;
  cfg.gen.seed = seed;
  cfg.reps = reps;
  return cfg;
}

}  // namespace

TEST_CASE("run_sweep produces one record per solver and size") {
  auto records = run_sweep(sweep_of({SolverId::dp}, {4}, GenKind::all_ones, 0.0, 0, 3));
  REQUIRE(records.size() == 1);
  CHECK(records[0].solver == SolverId::dp);
  CHECK(records[0].n == 4);
  CHECK(records[0].density == 1.0);
  CHECK(records[0].reps == 3);
  CHECK(records[0].counters.table_updates == 16);
  CHECK(records[0].time_min_ns <= records[0].time_median_ns);
}

TEST_CASE("run_sweep pairs every solver on one instance per size") {
  auto records =
      run_sweep(sweep_of({SolverId::naive, SolverId::dp}, {8}, GenKind::bernoulli, 0.5, 1, 5));
  REQUIRE(records.size() == 2);
  CHECK(records[0].solver == SolverId::naive);
  CHECK(records[1].solver == SolverId::dp);
  CHECK(records[0].seed == records[1].seed);

  // Requesting solvers out of canonical order still yields sorted records.
  auto swapped =
      run_sweep(sweep_of({SolverId::dp, SolverId::naive}, {2, 4}, GenKind::bernoulli, 0.5, 1, 1));
  REQUIRE(swapped.size() == 4);
  CHECK(swapped[0].solver == SolverId::naive);
  CHECK(swapped[0].n == 2);
  CHECK(swapped[1].n == 4);
  CHECK(swapped[2].solver == SolverId::dp);
}

TEST_CASE("run_sweep guards the recursive solver") {
  auto cfg = sweep_of({SolverId::recursive}, {16}, GenKind::all_zeros, 0.0, 0, 1);
  CHECK(code_of([&] { run_sweep(cfg); }) == errc::instance_too_large);

  cfg.force = true;
  auto records = run_sweep(cfg);
  REQUIRE(records.size() == 1);
  CHECK(records[0].counters.recursive_calls == 256);  // all zeros: one call per start cell

  cfg.force = false;
  cfg.recursion_cap = 16;
  CHECK(run_sweep(cfg).size() == 1);
}

TEST_CASE("run_sweep validates its inputs") {
  CHECK(code_of([] { run_sweep(sweep_of({}, {4}, GenKind::all_ones, 0, 0, 1)); }) ==
        errc::empty_input);
  CHECK(code_of([] { run_sweep(sweep_of({SolverId::dp}, {}, GenKind::all_ones, 0, 0, 1)); }) ==
        errc::empty_input);
  CHECK(code_of([] {
          run_sweep(sweep_of({SolverId::dp}, {4, 4}, GenKind::all_ones, 0, 0, 1));
        }) == errc::invalid_spec);
  CHECK(code_of([] {
          run_sweep(sweep_of({SolverId::dp}, {8, 4}, GenKind::all_ones, 0, 0, 1));
        }) == errc::invalid_spec);
  CHECK(code_of([] {
          run_sweep(sweep_of({SolverId::dp}, {4}, GenKind::all_ones, 0, 0, 0));
        }) == errc::invalid_spec);
}

TEST_CASE("fit_growth recovers the exact DP exponent") {
  auto records =
      run_sweep(sweep_of({SolverId::dp}, {16, 32, 64, 128}, GenKind::bernoulli, 0.5, 3, 1));
  SlopeEstimate est = fit_growth(records, Metric::table_updates);
  CHECK(est.solver == SolverId::dp);
  CHECK(est.metric == Metric::table_updates);
  CHECK(est.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(est.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit_growth rejects unusable data") {
  auto records =
      run_sweep(sweep_of({SolverId::dp}, {4, 8, 16}, GenKind::all_ones, 0.0, 0, 1));
  CHECK(code_of([&] { fit_growth(records, Metric::table_updates); }) ==
        errc::insufficient_data);
  CHECK(code_of([&] { fit_growth({}, Metric::table_updates); }) == errc::insufficient_data);

  auto four = run_sweep(sweep_of({SolverId::dp}, {4, 8, 16, 32}, GenKind::all_ones, 0.0, 0, 1));
  CHECK(code_of([&] { fit_growth(four, Metric::recursive_calls); }) == errc::zero_metric);

  auto mixed =
      run_sweep(sweep_of({SolverId::naive, SolverId::dp}, {4, 8, 16, 32}, GenKind::all_ones,
                         0.0, 0, 1));
  CHECK(code_of([&] { fit_growth(mixed, Metric::cells_inspected); }) == errc::invalid_spec);
}

TEST_CASE("square_count closed form") {
  CHECK(square_count(1) == 1);
  CHECK(square_count(2) == 5);   // four 1x1 plus one 2x2
  CHECK(square_count(3) == 14);  // 9 + 4 + 1
  CHECK(code_of([] { square_count(0); }) == errc::domain);

  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t by_sum = 0;
    for (std::uint64_t k = 1; k <= n; ++k) by_sum += (n - k + 1) * (n - k + 1);
    CHECK(square_count(n) == by_sum);
  }
}

TEST_CASE("naive enumeration count equals square_count on any instance") {
  for (std::size_t n = 1; n <= 16; ++n) {
    CHECK(solve_naive(generate({GenKind::all_ones, n})).counters.submatrices_enumerated ==
          square_count(n));
  }
  GeneratorSpec spec{GenKind::bernoulli, 8, 0.5, 0, 11};
  CHECK(solve_naive(generate(spec)).counters.submatrices_enumerated == square_count(8));
}

TEST_CASE("call_count_oracle matches the pinned traces") {
  CHECK(call_count_oracle(matrix_from_rows({"0"})) == 1);
  CHECK(call_count_oracle(matrix_from_rows({"1"})) == 4);
  CHECK(call_count_oracle(generate({GenKind::all_ones, 2})) == 37);
  CHECK(call_count_oracle(BinaryMatrix{}) == 0);
}

TEST_CASE("call_count_oracle equals the measured call count") {
  BinaryMatrix ten = generate({GenKind::all_ones, 10});
  CHECK(call_count_oracle(ten) == *solve_recursive(ten).counters.recursive_calls);

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    GeneratorSpec spec{GenKind::bernoulli, 1 + seed % 10, 0.5, 0, 500 + seed};
    BinaryMatrix m = generate(spec);
    CHECK(call_count_oracle(m) == *solve_recursive(m).counters.recursive_calls);
  }
}

TEST_CASE("emit_csv writes the documented schema") {
  std::ostringstream empty;
  emit_csv({}, empty);
  CHECK(empty.str() ==
        "solver,n,density,seed,reps,time_median_ns,time_min_ns,cells_inspected,"
        "submatrices_enumerated,recursive_calls,table_updates\n");

  BenchRecord record;
  record.solver = SolverId::dp;
  record.n = 4;
  record.density = 1.0;
  record.seed = 42;
  record.reps = 3;
  record.time_median_ns = 1234;
  record.time_min_ns = 1100;
  record.counters.cells_inspected = 16;
  record.counters.table_updates = 16;

  std::ostringstream one;
  emit_csv({record}, one);
  CHECK(one.str() ==
        "solver,n,density,seed,reps,time_median_ns,time_min_ns,cells_inspected,"
        "submatrices_enumerated,recursive_calls,table_updates\n"
        "dp,4,1,42,3,1234,1100,16,,,16\n");

  std::ostringstream slope;
  append_slope_comment(SlopeEstimate{SolverId::dp, 2.0, 1.0, Metric::table_updates}, slope);
  CHECK(slope.str() == "#slope,dp,table_updates,2,1\n");
}

TEST_CASE("CSV emit then parse is the identity") {
  auto records = run_sweep(sweep_of({SolverId::naive, SolverId::memoized, SolverId::dp},
                                    {2, 3, 5}, GenKind::bernoulli, 0.5, 9, 2));
  std::ostringstream first;
  emit_csv(records, first);
  first << "#slope,dp,table_updates,2,1\n";  // comments must not confuse the parser

  std::istringstream in(first.str());
  auto parsed = parse_csv(in);
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].solver == records[i].solver);
    CHECK(parsed[i].n == records[i].n);
    CHECK(parsed[i].density == records[i].density);
    CHECK(parsed[i].seed == records[i].seed);
    CHECK(parsed[i].reps == records[i].reps);
    CHECK(parsed[i].time_median_ns == records[i].time_median_ns);
    CHECK(parsed[i].time_min_ns == records[i].time_min_ns);
    CHECK(parsed[i].counters.cells_inspected == records[i].counters.cells_inspected);
    CHECK(parsed[i].counters.submatrices_enumerated ==
          records[i].counters.submatrices_enumerated);
    CHECK(parsed[i].counters.recursive_calls == records[i].counters.recursive_calls);
    CHECK(parsed[i].counters.table_updates == records[i].counters.table_updates);
  }

  std::ostringstream second;
  emit_csv(parsed, second);
  std::string without_comment = first.str();
  without_comment.resize(without_comment.size() -
                         std::string("#slope,dp,table_updates,2,1\n").size());
  CHECK(second.str() == without_comment);

  std::istringstream bad("not,a,header\n");
  CHECK(code_of([&] { parse_csv(bad); }) == errc::illegal_character);
}

TEST_CASE("clock probe reports a positive resolution") {
  std::uint64_t res = probe_clock_resolution_ns();
  CHECK(res > 0);
  MESSAGE("monotonic clock resolution: ", res, " ns");
}
