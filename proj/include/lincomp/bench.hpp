#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "field.hpp"
#include "reduction.hpp"
#include "report.hpp"

// Benchmark harness: seeded random sequences over one field, every requested
// algorithm on each, mean field-op counts and wall time, and a check of each
// run against the applicable cost bounds:
//   decompose                      <= 3(u-1) N
//   Games-Chan on period N'        <= 2 p^2 N'
//   decompose + component solves   <= (3(u-1) + 2 p^2) N   (all components Games-Chan)
//
// Config (JSON):
//   {"p": 7, "m": 1, "modulus": [..],                      modulus optional
//    "periods": [21, 147]  or  "family": {"multiplier": 3, "base": 7, "h_min": 1, "h_max": 4},
//    "trials": 3, "seed": 1, "algorithms": ["reduction", "bm"]}

namespace lincomp {

struct BenchConfig {
  std::uint64_t p = 0;
  std::uint32_t m = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  std::vector<std::size_t> periods;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::vector<Strategy> algorithms{Strategy::Auto, Strategy::BerlekampMassey};
};

inline BenchConfig parse_bench_config(const nlohmann::json& j) {
  auto bad = [](const std::string& what) { return Error(ErrorCode::BadConfig, what); };
  if (!j.is_object()) throw bad("config must be a JSON object");
  BenchConfig c;
  try {
    if (!j.contains("p")) throw bad("missing \"p\"");
    c.p = j.at("p").get<std::uint64_t>();
    if (j.contains("m")) c.m = j.at("m").get<std::uint32_t>();
    if (j.contains("modulus")) c.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    if (j.contains("periods")) c.periods = j.at("periods").get<std::vector<std::size_t>>();
    if (j.contains("family")) {
      const auto& fam = j.at("family");
      const auto mult = fam.value("multiplier", std::uint64_t{1});
      const auto base = fam.at("base").get<std::uint64_t>();
      const auto lo = fam.at("h_min").get<unsigned>(), hi = fam.at("h_max").get<unsigned>();
      if (base < 2 || mult == 0 || lo > hi || hi > 40) throw bad("family needs base >= 2, multiplier >= 1, h_min <= h_max");
      for (unsigned h = lo; h <= hi; ++h) c.periods.push_back(mult * nt::ipow(base, h));
    }
    if (j.contains("trials")) {
      const auto t = j.at("trials").get<std::int64_t>();
      if (t <= 0) throw bad("trials must be positive");
      c.trials = static_cast<std::size_t>(t);
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("algorithms")) {
      c.algorithms.clear();
      for (const auto& a : j.at("algorithms")) {
        const auto s = strategy_from_string(a.get<std::string>());
        if (!s) throw bad("unknown algorithm \"" + a.get<std::string>() + "\"");
        c.algorithms.push_back(*s);
      }
      if (c.algorithms.empty()) throw bad("algorithms must not be empty");
    }
  } catch (const nlohmann::json::exception& e) {
    throw bad(e.what());
  }
  if (c.periods.empty()) throw bad("config needs \"periods\" or \"family\"");
  for (auto n : c.periods)
    if (n == 0) throw bad("periods must be positive");
  return c;
}

inline BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadConfig, "cannot open '" + path + "'");
  try {
    return parse_bench_config(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::BadConfig, e.what());
  }
}

struct BoundCheck {
  std::string name;
  std::uint64_t bound;          // largest bound over the trials
  std::uint64_t max_observed;
  std::size_t violations;
};

struct BenchRow {
  std::size_t period = 0;
  Strategy algorithm = Strategy::Auto;
  bool applicable = true;
  std::string skipped_reason;
  std::size_t trials = 0;
  double mean_ops = 0;
  double mean_decompose_ops = 0;
  double mean_component_ops = 0;
  double mean_compose_ops = 0;
  double mean_ms = 0;
  double ratio_to_first = 1;  // mean_ops over that of the first applicable algorithm at this N
  std::vector<BoundCheck> checks;
};

struct BenchReport {
  BenchConfig config;
  FieldSpec field;
  std::vector<BenchRow> rows;
  std::size_t disagreements = 0;  // trials where algorithms disagree on c or m

  std::size_t violations() const {
    std::size_t v = 0;
    for (const auto& r : rows)
      for (const auto& c : r.checks) v += c.violations;
    return v;
  }
};

namespace detail {

inline void record(std::vector<BoundCheck>& checks, const std::string& name, std::uint64_t observed,
                   std::uint64_t bound) {
  for (auto& c : checks) {
    if (c.name == name) {
      c.bound = std::max(c.bound, bound);
      c.max_observed = std::max(c.max_observed, observed);
      c.violations += observed > bound;
      return;
    }
  }
  checks.push_back({name, bound, observed, observed > bound ? 1u : 0u});
}

inline bool is_power_of(std::size_t n, std::uint64_t p) { return nt::exact_log(n, p).has_value(); }

}  // namespace detail

inline BenchReport run_bench(const BenchConfig& cfg) {
  const FieldSpec field = make_field(cfg.p, cfg.m, cfg.modulus);
  const std::uint64_t p = field.characteristic();
  BenchReport report{cfg, field, {}, 0};

  for (const std::size_t n : cfg.periods) {
    std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * n));
    std::vector<PeriodicSequence> inputs;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      std::vector<FieldElement> period;
      period.reserve(n);
      for (std::size_t i = 0; i < n; ++i) period.push_back(field.from_index(rng() % field.size()));
      inputs.emplace_back(field, std::move(period));
    }

    std::vector<std::optional<LinCompResult>> reference(cfg.trials);
    std::optional<double> first_ops;
    for (const Strategy alg : cfg.algorithms) {
      BenchRow row;
      row.period = n;
      row.algorithm = alg;
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const auto start = std::chrono::steady_clock::now();
        Solution sol = [&]() -> Solution {
          try {
            return run_strategy(inputs[t], alg);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::AlgorithmInapplicable) throw;
            row.applicable = false;
            row.skipped_reason = e.what();
            return {LinCompResult{0, Poly::one(field), Algorithm::Oracle, 0}, std::nullopt};
          }
        }();
        if (!row.applicable) break;
        row.mean_ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        row.mean_ops += static_cast<double>(sol.result.field_ops);
        ++row.trials;

        if (sol.trace) {
          const auto& tr = *sol.trace;
          const std::uint64_t u = tr.plan.u;
          row.mean_decompose_ops += static_cast<double>(tr.decompose_ops);
          row.mean_component_ops += static_cast<double>(tr.component_ops);
          row.mean_compose_ops += static_cast<double>(tr.compose_ops);
          detail::record(row.checks, "decompose <= 3(u-1)N", tr.decompose_ops, 3 * (u - 1) * n);
          if (detail::is_power_of(tr.plan.n, p)) {
            for (const auto& cr : tr.component_results)
              detail::record(row.checks, "component ggc <= 2p^2 n", cr.field_ops, 2 * p * p * tr.plan.n);
            detail::record(row.checks, "reduction+ggc <= (3(u-1)+2p^2)N", tr.decompose_ops + tr.component_ops,
                           (3 * (u - 1) + 2 * p * p) * n);
          }
        } else {
          row.mean_component_ops += static_cast<double>(sol.result.field_ops);
          if (sol.result.algorithm == Algorithm::GamesChan)
            detail::record(row.checks, "ggc <= 2p^2 N", sol.result.field_ops, 2 * p * p * n);
        }

        if (!reference[t]) {
          reference[t] = sol.result;
        } else if (reference[t]->complexity != sol.result.complexity || reference[t]->min_poly != sol.result.min_poly) {
          ++report.disagreements;
        }
      }
      if (row.trials) {
        const double k = static_cast<double>(row.trials);
        row.mean_ops /= k;
        row.mean_decompose_ops /= k;
        row.mean_component_ops /= k;
        row.mean_compose_ops /= k;
        row.mean_ms /= k;
        if (!first_ops) first_ops = row.mean_ops;
        row.ratio_to_first = *first_ops > 0 ? row.mean_ops / *first_ops : 1.0;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

/// JSON form; timing fields are dropped when include_timing is false so the
/// rest can be compared byte for byte across runs.
inline nlohmann::json to_json(const BenchReport& r, bool include_timing = true) {
  using nlohmann::json;
  json j;
  j["field"] = {{"p", r.field.characteristic()},
                {"m", r.field.degree()},
                {"modulus", std::vector<std::uint32_t>(r.field.modulus().begin(), r.field.modulus().end())}};
  j["trials"] = r.config.trials;
  j["seed"] = r.config.seed;
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    json jr = {{"period", row.period}, {"algorithm", std::string(to_string(row.algorithm))},
               {"applicable", row.applicable}};
    if (!row.applicable) {
      jr["skipped"] = row.skipped_reason;
    } else {
      const double n = static_cast<double>(row.period);
      jr["trials"] = row.trials;
      jr["mean_ops"] = row.mean_ops;
      jr["mean_decompose_ops"] = row.mean_decompose_ops;
      jr["mean_component_ops"] = row.mean_component_ops;
      jr["mean_compose_ops"] = row.mean_compose_ops;
      jr["ops_per_n"] = row.mean_ops / n;
      jr["ops_per_n2"] = row.mean_ops / (n * n);
      jr["ratio_to_first"] = row.ratio_to_first;
      jr["checks"] = json::array();
      for (const auto& c : row.checks)
        jr["checks"].push_back(
            {{"name", c.name}, {"bound", c.bound}, {"max_observed", c.max_observed}, {"violations", c.violations}});
      if (include_timing) jr["mean_ms"] = row.mean_ms;
    }
    j["rows"].push_back(jr);
  }
  j["disagreements"] = r.disagreements;
  j["violations"] = r.violations();
  return j;
}

inline std::string to_text(const BenchReport& r) {
  std::ostringstream os;
  os << "bench over " << r.field.name() << ", " << r.config.trials << " trial(s) per size, seed " << r.config.seed
     << "\n\n";
  os << std::left << std::setw(10) << "N" << std::setw(11) << "algorithm" << std::right << std::setw(16) << "mean ops"
     << std::setw(12) << "ops/N" << std::setw(12) << "ops/N^2" << std::setw(10) << "ratio" << std::setw(12) << "mean ms"
     << "  bounds\n";
  for (const auto& row : r.rows) {
    os << std::left << std::setw(10) << row.period << std::setw(11) << to_string(row.algorithm) << std::right;
    if (!row.applicable) {
      os << "  skipped: " << row.skipped_reason << "\n";
      continue;
    }
    const double n = static_cast<double>(row.period);
    os << std::fixed << std::setprecision(1) << std::setw(16) << row.mean_ops << std::setprecision(2) << std::setw(12)
       << row.mean_ops / n << std::setprecision(4) << std::setw(12) << row.mean_ops / (n * n) << std::setprecision(2)
       << std::setw(10) << row.ratio_to_first << std::setw(12) << row.mean_ms << std::defaultfloat << "  ";
    if (row.checks.empty()) os << "-";
    for (std::size_t i = 0; i < row.checks.size(); ++i) {
      const auto& c = row.checks[i];
      os << (i ? "; " : "") << c.name << " [" << c.max_observed << " / " << c.bound << "]"
         << (c.violations ? " VIOLATED" : " ok");
    }
    os << "\n";
  }
  os << "\nviolations " << r.violations() << ", disagreements " << r.disagreements << "\n";
  return os.str();
}

}  // namespace lincomp
