// Command-line front end: generate instances, solve them with any of the four
// strategies, count submatrices, verify claimed results, and benchmark.
//
// Exit codes: 0 success, 1 I/O failure, 2 usage or parse error, 3 recursion
// cap exceeded, 4 internal mismatch, 5 refuted claim.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "maxstretch/maxstretch.hpp"

namespace {

using namespace maxstretch;

constexpr int exit_ok = 0;
constexpr int exit_io = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;
constexpr int exit_mismatch = 4;
constexpr int exit_refuted = 5;

struct IoFailure {
  std::string message;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::instance_too_large: return exit_cap;
    case errc::internal_mismatch: return exit_mismatch;
    case errc::write_failure: return exit_io;
    default: return exit_usage;
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>{});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure{"cannot open '" + path + "' for reading"};
  std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
  if (in.bad()) throw IoFailure{"read failed on '" + path + "'"};
  return text;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    if (!std::cout) throw IoFailure{"write to standard output failed"};
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure{"cannot open '" + path + "' for writing"};
  out << content;
  out.flush();
  if (!out) throw IoFailure{"write failed on '" + path + "'"};
}

struct GenArgs {
  GenArgs() {
    spec.density = 0.5;
    spec.seed = 1;
  }
  GeneratorSpec spec;
  std::string output = "-";
};

struct SolveArgs {
  std::string solver;
  std::string input = "-";
  std::string output = "-";
  std::size_t cap = default_recursion_cap;
  bool force = false;
};

struct CountArgs {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
};

struct VerifyArgs {
  std::string input = "-";
  std::string claim;
  bool claim_given = false;
};

struct BenchArgs {
  BenchArgs() {
    gen.kind = GenKind::bernoulli;
    gen.density = 0.5;
    gen.seed = 1;
  }
  std::vector<std::string> solvers;
  std::vector<std::size_t> sizes;
  GeneratorSpec gen;
  std::uint32_t reps = 11;
  std::size_t cap = default_recursion_cap;
  bool force = false;
  std::string output = "-";
};

MaxSquareResult dispatch_solver(SolverId id, const BinaryMatrix& m, std::size_t cap,
                                bool force) {
  switch (id) {
    case SolverId::naive: return solve_naive(m);
    case SolverId::recursive:
      return solve_recursive(m, force ? std::numeric_limits<std::size_t>::max() : cap);
    case SolverId::memoized: return solve_memoized(m);
    case SolverId::dp: return solve_dp(m);
  }
  fail(errc::invalid_spec, "unknown solver");
}

int run_gen(const GenArgs& args) {
  BinaryMatrix m = generate(args.spec);
  write_output(args.output, serialize_matrix(m));
  return exit_ok;
}

int run_solve(const SolveArgs& args) {
  SolverId id = parse_solver(args.solver);
  BinaryMatrix m = parse_matrix(read_input(args.input));
  MaxSquareResult result = dispatch_solver(id, m, args.cap, args.force);
  std::uint64_t side = result.side;
  std::string out = serialize_result(result) + "\n" + "m=" + std::to_string(side) +
                    " m2=" + std::to_string(side * side) + "\n";
  write_output(args.output, out);
  return exit_ok;
}

int run_count(const CountArgs& args) {
  CountResult recursive{phi_recursive(args.m, args.n), CountMethod::recursive};
  CountResult closed{phi_closed(args.m, args.n), CountMethod::closed_form};
  std::vector<CountResult> results{recursive, closed};

  if (args.m <= enumeration_guard / args.n) {
    results.push_back({count_by_enumeration(args.m, args.n), CountMethod::enumeration});
  } else {
    std::cerr << "enumeration skipped: guard allows m*n <= " << enumeration_guard << "\n";
  }

  std::string out;
  for (const CountResult& r : results)
    out += std::string(count_method_name(r.method)) + "=" + to_string(r.value) + "\n";
  write_output("-", out);

  for (const CountResult& r : results) {
    if (r.value != results.front().value) {
      std::cerr << "mismatch: " << count_method_name(r.method) << " disagrees\n";
      return exit_mismatch;
    }
  }
  return exit_ok;
}

int run_verify(const VerifyArgs& args) {
  if (args.input == "-" && !args.claim_given)
    fail(errc::invalid_spec, "matrix and claim cannot both come from standard input; "
                             "pass the matrix with --input");
  BinaryMatrix m = parse_matrix(read_input(args.input));

  std::string claim_line = args.claim;
  if (!args.claim_given) {
    if (!std::getline(std::cin, claim_line))
      fail(errc::empty_input, "no claim record on standard input");
  }
  MaxSquareResult claim = parse_result_record(claim_line);

  WitnessCheck check;
  try {
    check = check_witness(m, claim);
  } catch (const Error& e) {
    if (e.code() != errc::anchor_out_of_bounds) throw;
    // A claim whose block does not even fit is refuted by its own anchor.
    Coord a = claim.anchor.value_or(Coord{0, 0});
    std::cout << "(" << a.row << "," << a.col << ")\n";
    std::cerr << e.what() << "\n";
    return exit_refuted;
  }

  if (!check.ok) {
    Coord c = check.zero_in_block ? *check.zero_in_block : *check.larger_square;
    std::cout << "(" << c.row << "," << c.col << ")\n";
    std::cerr << (check.zero_in_block ? "claimed block contains a zero"
                                      : "a larger all-ones square exists")
              << "\n";
    return exit_refuted;
  }

  MaxSquareResult reference = solve_dp(m);
  if (reference.side != claim.side)
    fail(errc::internal_mismatch, "witness scan and DP solve disagree");
  std::cout << "ok side=" << claim.side << "\n";
  return exit_ok;
}

int run_bench(const BenchArgs& args) {
  SweepConfig cfg;
  for (const std::string& name : args.solvers) cfg.solvers.push_back(parse_solver(name));
  cfg.sizes = args.sizes;
  cfg.gen = args.gen;
  cfg.reps = args.reps;
  cfg.recursion_cap = args.cap;
  cfg.force = args.force;

  std::uint64_t resolution = probe_clock_resolution_ns();
  std::vector<BenchRecord> records = run_sweep(cfg);

  std::ostringstream out;
  emit_csv(records, out);
  out << "#clock,resolution_ns," << resolution << ","
      << (resolution <= 1'000 ? "reliable" : "unreliable") << "\n";
  if (resolution > 1'000)
    std::cerr << "warning: clock resolution " << resolution
              << " ns is coarser than 1 us; timings are unreliable\n";

  const Metric metrics[] = {Metric::cells_inspected, Metric::submatrices_enumerated,
                            Metric::recursive_calls, Metric::table_updates,
                            Metric::time_median_ns};
  for (SolverId id : all_solver_ids) {
    std::vector<BenchRecord> own;
    for (const BenchRecord& r : records)
      if (r.solver == id) own.push_back(r);
    if (own.empty()) continue;
    for (Metric metric : metrics) {
      try {
        append_slope_comment(fit_growth(own, metric), out);
      } catch (const Error& e) {
        if (e.code() != errc::insufficient_data && e.code() != errc::zero_metric) throw;
      }
    }
  }

  write_output(args.output, out.str());
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal Stretch: largest all-ones square solvers and benchmarks"};
  app.require_subcommand(1);

  const std::map<std::string, GenKind> kind_map{{"all-ones", GenKind::all_ones},
                                                {"all-zeros", GenKind::all_zeros},
                                                {"identity", GenKind::identity},
                                                {"bernoulli", GenKind::bernoulli},
                                                {"planted", GenKind::planted}};
  const std::vector<std::string> solver_names{"naive", "recursive", "memoized", "dp"};

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a binary matrix (.bmat)");
  gen->add_option("--kind", gen_args.spec.kind, "Instance kind")
      ->required()
      ->transform(CLI::CheckedTransformer(kind_map, CLI::ignore_case));
  gen->add_option("--n", gen_args.spec.n, "Matrix side")->required();
  gen->add_option("--density", gen_args.spec.density,
                  "One-probability for bernoulli/planted (default 0.5)");
  gen->add_option("--planted-side", gen_args.spec.planted_side,
                  "Side of the planted all-ones block");
  gen->add_option("--seed", gen_args.spec.seed, "Generator seed (default 1)")
      ->envname("MAXSTRETCH_SEED");
  gen->add_option("-o,--output", gen_args.output, "Output path or - for stdout");

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Find the maximal all-ones square");
  solve->add_option("--solver", solve_args.solver, "One of naive|recursive|memoized|dp")
      ->required()
      ->check(CLI::IsMember(solver_names));
  solve->add_option("-i,--input", solve_args.input, "Matrix path or - for stdin");
  solve->add_option("-o,--output", solve_args.output, "Output path or - for stdout");
  solve->add_option("--cap", solve_args.cap, "Recursion cap for the recursive solver");
  solve->add_flag("--force", solve_args.force, "Ignore the recursion cap");

  CountArgs count_args;
  CLI::App* count = app.add_subcommand("count", "Count contiguous submatrices three ways");
  count->add_option("--m", count_args.m, "Row count")->required();
  count->add_option("--n", count_args.n, "Column count")->required();

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Check a claimed result against a matrix");
  verify->add_option("-i,--input", verify_args.input, "Matrix path or - for stdin");
  verify->add_option("--claim", verify_args.claim,
                     "Result record; read from stdin when omitted");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Sweep sizes and emit a CSV of measurements");
  bench->add_option("--solvers", bench_args.solvers, "Comma-separated solver list")
      ->required()
      ->delimiter(',');
  bench->add_option("--sizes", bench_args.sizes, "Comma-separated strictly increasing sizes")
      ->required()
      ->delimiter(',');
  bench->add_option("--kind", bench_args.gen.kind, "Instance kind (default bernoulli)")
      ->transform(CLI::CheckedTransformer(kind_map, CLI::ignore_case));
  bench->add_option("--density", bench_args.gen.density, "One-probability (default 0.5)");
  bench->add_option("--planted-side", bench_args.gen.planted_side,
                    "Side of the planted block");
  bench->add_option("--seed", bench_args.gen.seed, "Base seed; size index is added (default 1)")
      ->envname("MAXSTRETCH_SEED");
  bench->add_option("--reps", bench_args.reps, "Timed repetitions per instance (default 11)");
  bench->add_option("--cap", bench_args.cap, "Recursion cap for the recursive solver");
  bench->add_flag("--force", bench_args.force, "Ignore the recursion cap");
  bench->add_option("-o,--output", bench_args.output, "CSV path or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (solve->parsed()) return run_solve(solve_args);
    if (count->parsed()) return run_count(count_args);
    if (verify->parsed()) {
      verify_args.claim_given = verify->count("--claim") > 0;
      return run_verify(verify_args);
    }
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const IoFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return exit_io;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
