#pragma once

#include <iostream>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "error.hpp"
#include "report.hpp"
#include "text_format.hpp"

namespace lincomp {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,      // --verify disagreed, or a bench bound was violated
  kExitUsage = 2,         // bad flags, unreadable or malformed input
  kExitInapplicable = 3,  // the forced algorithm's precondition fails
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::AlgorithmInapplicable:
    case ErrorCode::NotPrimePowerPeriod:
    case ErrorCode::WrongCharacteristic:
      return kExitInapplicable;
    default:
      return kExitUsage;
  }
}

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear complexity and minimal connection polynomial of periodic sequences over GF(p^m)", "lincomp"};
  std::string field_text, input, algorithm = "auto", bench_path;
  bool verify = false, json = false, inject_mismatch = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> random_period;

  app.add_option("--field", field_text,
                 "field as a header line, e.g. \"p=7 m=1\" or \"p=3 m=2 mod=2,2,1\"; "
                 "supplies the field for headerless input and must match a file header otherwise");
  app.add_option("--input", input, "sequence file; '-' reads standard input");
  app.add_option("--algorithm", algorithm, "auto | bm | ggc | reduction | oracle")
      ->check(CLI::IsMember({"auto", "bm", "ggc", "reduction", "oracle"}));
  app.add_flag("--verify", verify, "also run the oracle and the recurrence check; exit 1 on disagreement");
  app.add_flag("--json", json, "print a JSON report");
  app.add_option("--seed", seed, "seed for --random and for --bench (overrides the config)");
  app.add_option("--random", random_period, "solve a seeded random sequence of this period over --field");
  app.add_option("--bench", bench_path, "run the benchmark described by a JSON config file");
  app.add_flag("--inject-mismatch", inject_mismatch, "corrupt the oracle side of --verify (testing)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!bench_path.empty()) {
      if (!input.empty() || random_period) throw Error(ErrorCode::InvalidArgument, "--bench takes no sequence input");
      BenchConfig cfg = load_bench_config(bench_path);
      if (seed) cfg.seed = *seed;
      const BenchReport report = run_bench(cfg);
      if (json)
        out << to_json(report).dump() << "\n";
      else
        out << to_text(report);
      return report.violations() || report.disagreements ? kExitMismatch : kExitOk;
    }

    std::optional<FieldSpec> field;
    if (!field_text.empty()) field = parse_field_header(field_text);

    std::optional<PeriodicSequence> seq;
    std::string descriptor;
    if (random_period) {
      if (!input.empty()) throw Error(ErrorCode::InvalidArgument, "--random and --input are exclusive");
      if (!field) throw Error(ErrorCode::InvalidArgument, "--random needs --field");
      if (*random_period == 0) throw Error(ErrorCode::InvalidArgument, "--random needs a positive period");
      std::mt19937_64 rng(seed.value_or(1));
      std::vector<FieldElement> period;
      for (std::size_t i = 0; i < *random_period; ++i) period.push_back(field->from_index(rng() % field->size()));
      seq.emplace(*field, std::move(period));
      descriptor = "random N=" + std::to_string(*random_period) + " seed=" + std::to_string(seed.value_or(1));
    } else if (input.empty()) {
      err << "lincomp: one of --input, --random or --bench is required\n" << app.help();
      return kExitUsage;
    } else if (input == "-") {
      seq = parse_sequence(std::cin, field);
      descriptor = "<stdin>";
    } else {
      seq = parse_sequence_file(input, field);
      descriptor = input;
    }

    SolveOptions opts{*strategy_from_string(algorithm), verify, inject_mismatch};
    const RunReport report = solve_report(*seq, descriptor, opts);
    if (json)
      out << to_json(report).dump() << "\n";
    else
      out << to_text(report);
    if (report.verification && !report.verification->ok()) return kExitMismatch;
    return kExitOk;
  } catch (const Error& e) {
    err << "lincomp: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace lincomp
