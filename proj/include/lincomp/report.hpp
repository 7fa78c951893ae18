#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "reduction.hpp"
#include "sequence.hpp"
#include "text_format.hpp"

namespace lincomp {

enum class Strategy { Auto, BerlekampMassey, GamesChan, Reduction, Oracle };

inline std::optional<Strategy> strategy_from_string(std::string_view s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "bm") return Strategy::BerlekampMassey;
  if (s == "ggc") return Strategy::GamesChan;
  if (s == "reduction") return Strategy::Reduction;
  if (s == "oracle") return Strategy::Oracle;
  return std::nullopt;
}

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::BerlekampMassey: return "bm";
    case Strategy::GamesChan: return "ggc";
    case Strategy::Reduction: return "reduction";
    case Strategy::Oracle: return "oracle";
  }
  return "?";
}

struct PhaseOps {
  std::uint64_t reduction = 0;
  std::uint64_t components = 0;
  std::uint64_t compose = 0;
  std::uint64_t total() const { return reduction + components + compose; }
};

/// Minimal polynomial factor m_j applied at b_j^{-1} x.
struct ScaledFactor {
  Poly factor;
  FieldElement scale_b;
};

struct Verification {
  bool recurrence_holds;
  bool matches_oracle;
  std::size_t oracle_complexity;
  bool ok() const { return recurrence_holds && matches_oracle; }
};

struct RunReport {
  std::string input;  // file path or a description of generated input
  PeriodicSequence sequence;
  Strategy requested;
  LinCompResult result;
  std::optional<ReductionTrace> trace;
  std::vector<ScaledFactor> factored;
  PhaseOps ops;
  double wall_ms = 0;
  std::optional<Verification> verification;
};

/// Runs one strategy. Forcing an algorithm whose precondition fails throws
/// AlgorithmInapplicable naming the precondition.
inline Solution run_strategy(const PeriodicSequence& s, Strategy strategy) {
  const FieldSpec& f = s.field();
  switch (strategy) {
    case Strategy::Auto: return solve_auto_traced(s);
    case Strategy::BerlekampMassey: return {berlekamp_massey(s), std::nullopt};
    case Strategy::Oracle: return {oracle_lincomp(s), std::nullopt};
    case Strategy::GamesChan:
      if (!nt::exact_log(s.period(), f.characteristic()))
        throw Error(ErrorCode::AlgorithmInapplicable, "ggc needs a period that is a power of p = " +
                                                          std::to_string(f.characteristic()) + ", got " +
                                                          std::to_string(s.period()));
      return {ggc_lincomp(s), std::nullopt};
    case Strategy::Reduction: {
      auto outcome = plan_reduction(f, s.period());
      if (auto* no = std::get_if<Inapplicable>(&outcome))
        throw Error(ErrorCode::AlgorithmInapplicable, "reduction over " + f.name() + " with N = " +
                                                          std::to_string(s.period()) + ": " + no->describe());
      return solve_with_plan(s, std::get<ReductionPlan>(outcome));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown strategy");
}

struct SolveOptions {
  Strategy strategy = Strategy::Auto;
  bool verify = false;
  bool inject_mismatch = false;  // test hook: corrupts the oracle side of --verify
};

inline RunReport solve_report(const PeriodicSequence& s, std::string input, const SolveOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Solution sol = run_strategy(s, opts.strategy);
  const auto stop = std::chrono::steady_clock::now();

  RunReport r{std::move(input), s, opts.strategy, sol.result, sol.trace, {}, {}, 0, std::nullopt};
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  if (sol.trace) {
    r.ops = {sol.trace->decompose_ops, sol.trace->component_ops, sol.trace->compose_ops};
    for (std::size_t j = 0; j < sol.trace->plan.u; ++j)
      r.factored.push_back({sol.trace->component_results[j].min_poly, sol.trace->plan.roots_b[j]});
  } else {
    r.ops.components = sol.result.field_ops;
    r.factored.push_back({sol.result.min_poly, s.field().one()});
  }

  if (opts.verify) {
    LinCompResult oracle = oracle_lincomp(s);
    if (opts.inject_mismatch) oracle.complexity += 1;
    r.verification = Verification{verify_recurrence(s, sol.result.min_poly),
                                  oracle.complexity == sol.result.complexity && oracle.min_poly == sol.result.min_poly,
                                  oracle.complexity};
  }
  return r;
}

/// Product form of the minimal polynomial, one factor per component.
inline std::string format_factored(const RunReport& r) {
  std::vector<const ScaledFactor*> nontrivial;
  for (const auto& sf : r.factored)
    if (sf.factor.degree() > 0) nontrivial.push_back(&sf);
  if (nontrivial.empty()) return "1";
  const Poly& only = nontrivial.front()->factor;
  if (nontrivial.size() == 1 && only != binomial_power(only.field(), static_cast<std::uint64_t>(only.degree())))
    return format_poly(r.result.min_poly);
  std::string out;
  for (const auto* sf : nontrivial) {
    if (!out.empty()) out += " ";
    out += format_scaled_factor(sf->factor, inverse(sf->scale_b));
  }
  return out;
}

namespace detail {

inline nlohmann::json coords_json(const FieldElement& e) { return e.coords(); }

inline nlohmann::json poly_json(const Poly& f) {
  auto out = nlohmann::json::array();
  for (const auto& c : f.coeffs()) out.push_back(coords_json(c));
  return out;
}

}  // namespace detail

/// Machine-readable report. Everything except wall_ms is a pure function of
/// the input and options.
inline nlohmann::json to_json(const RunReport& r, bool include_timing = true) {
  using nlohmann::json;
  const FieldSpec& f = r.sequence.field();
  json j;
  j["input"] = r.input;
  j["field"] = {{"p", f.characteristic()},
                {"m", f.degree()},
                {"modulus", std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end())}};
  j["period"] = r.sequence.period();
  j["requested"] = std::string(to_string(r.requested));
  j["algorithm"] = std::string(to_string(r.result.algorithm));
  j["complexity"] = r.result.complexity;
  j["min_poly_expanded"] = detail::poly_json(r.result.min_poly);
  j["min_poly_factored"] = json::array();
  for (const auto& sf : r.factored)
    j["min_poly_factored"].push_back({{"factor_coeffs", detail::poly_json(sf.factor)},
                                      {"scale_b", detail::coords_json(sf.scale_b)}});
  j["min_poly_text"] = format_poly(r.result.min_poly);
  j["min_poly_factored_text"] = format_factored(r);
  j["ops"] = {{"reduction", r.ops.reduction},
              {"components", r.ops.components},
              {"compose", r.ops.compose},
              {"total", r.ops.total()}};
  if (r.trace) {
    const auto& plan = r.trace->plan;
    json roots_b = json::array(), roots_x = json::array();
    for (const auto& b : plan.roots_b) roots_b.push_back(detail::coords_json(b));
    for (const auto& x : plan.roots_x) roots_x.push_back(detail::coords_json(x));
    j["plan"] = {{"u", plan.u}, {"n", plan.n}, {"roots_x", roots_x}, {"roots_b", roots_b}};
    j["components"] = json::array();
    for (std::size_t i = 0; i < plan.u; ++i) {
      json seq = json::array();
      for (const auto& e : r.trace->components[i].elements()) seq.push_back(detail::coords_json(e));
      const auto& cr = r.trace->component_results[i];
      j["components"].push_back({{"sequence", seq},
                                 {"complexity", cr.complexity},
                                 {"algorithm", std::string(to_string(cr.algorithm))},
                                 {"min_poly", detail::poly_json(cr.min_poly)},
                                 {"ops", cr.field_ops}});
    }
  }
  if (r.verification) {
    j["verified"] = r.verification->ok();
    j["verification"] = {{"recurrence_holds", r.verification->recurrence_holds},
                         {"matches_oracle", r.verification->matches_oracle},
                         {"oracle_complexity", r.verification->oracle_complexity}};
  }
  if (include_timing) j["wall_ms"] = r.wall_ms;
  return j;
}

inline std::string to_text(const RunReport& r) {
  std::ostringstream os;
  const FieldSpec& f = r.sequence.field();
  os << "input       " << r.input << "\n";
  os << "field       " << f.name() << "  (" << format_field_header(f) << ")\n";
  os << "period      " << r.sequence.period() << "\n";
  os << "algorithm   " << to_string(r.result.algorithm);
  if (r.trace) os << "  (u = " << r.trace->plan.u << ", n = " << r.trace->plan.n << ")";
  os << "\n";
  os << "complexity  " << r.result.complexity << "\n";
  os << "min poly    " << format_factored(r) << "\n";
  os << "expanded    " << format_poly(r.result.min_poly) << "\n";
  if (r.trace) {
    for (std::size_t j = 0; j < r.trace->plan.u; ++j) {
      const auto& cr = r.trace->component_results[j];
      os << "  a^" << j << "  b = " << format_coefficient(r.trace->plan.roots_b[j]) << "  c = " << cr.complexity
         << "  " << to_string(cr.algorithm) << "  ops = " << cr.field_ops << "\n";
    }
  }
  os << "field ops   reduction " << r.ops.reduction << ", components " << r.ops.components << ", compose "
     << r.ops.compose << ", total " << r.ops.total() << "\n";
  os << "wall time   " << r.wall_ms << " ms\n";
  if (r.verification) {
    os << "verified    " << (r.verification->ok() ? "yes" : "NO");
    if (!r.verification->recurrence_holds) os << "  (recurrence fails)";
    if (!r.verification->matches_oracle)
      os << "  (oracle says c = " << r.verification->oracle_complexity << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace lincomp
