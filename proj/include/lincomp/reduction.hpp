#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "berlekamp_massey.hpp"
#include "error.hpp"
#include "field.hpp"
#include "games_chan.hpp"
#include "number_theory.hpp"
#include "op_count.hpp"
#include "poly.hpp"
#include "sequence.hpp"

// Reduction of a period-un sequence over GF(p^m) to u sequences of period n,
// valid when u | p^m - 1 and gcd(n, p^m - 1) = 1. Complexities add, and the
// minimal polynomial is the product of the components' polynomials with their
// arguments scaled by b_j^{-1}, where b_j is the n-th root of the j-th u-th
// root of unity.

namespace lincomp {

/// Split N = u * n together with the roots the decomposition needs.
struct ReductionPlan {
  FieldSpec field;
  std::size_t period;
  std::size_t u;
  std::size_t n;
  std::vector<FieldElement> roots_x;  // u-th roots of unity, canonical order, roots_x[0] = 1
  std::vector<FieldElement> roots_b;  // roots_b[j]^n = roots_x[j]
};

struct Inapplicable {
  enum class Reason {
    NothingToSplit,       // gcd(N, q) = 1, so u = 1
    MultiplicityTooHigh,  // the forced u does not divide q
  };
  Reason reason;
  std::size_t u;

  std::string describe() const {
    return reason == Reason::NothingToSplit
               ? "period shares no prime with p^m - 1 (u = 1)"
               : "u = " + std::to_string(u) + " collects every shared prime of the period but does not divide p^m - 1";
  }
};

using PlanOutcome = std::variant<ReductionPlan, Inapplicable>;

/// The only admissible u takes each prime r | q with its full multiplicity in N;
/// any smaller share of r would leave r dividing both n and q.
inline PlanOutcome plan_reduction(const FieldSpec& field, std::size_t period) {
  if (period == 0) throw Error(ErrorCode::InvalidArgument, "period must be positive");
  const std::uint64_t q = field.order_minus_one();
  std::size_t u = 1;
  for (const auto& [r, mult] : nt::factorize(q)) u *= nt::ipow(r, nt::valuation(period, r));
  if (u == 1) return Inapplicable{Inapplicable::Reason::NothingToSplit, u};
  if (q % u != 0) return Inapplicable{Inapplicable::Reason::MultiplicityTooHigh, u};

  const std::size_t n = period / u;
  auto roots_x = uth_roots_of_unity(field, u);
  std::vector<FieldElement> roots_b;
  roots_b.reserve(u);
  for (const auto& x : roots_x) roots_b.push_back(nth_root_coprime(x, n));
  return ReductionPlan{field, period, u, n, std::move(roots_x), std::move(roots_b)};
}

/// True iff the u factors 1 - (b_j^{-1} x)^n of 1 - x^{un} are pairwise coprime.
inline bool plan_factors_coprime(const ReductionPlan& plan) {
  const Poly base = one_minus_x_pow(plan.field, plan.n);
  std::vector<Poly> factors;
  for (const auto& b : plan.roots_b) factors.push_back(scale_argument(base, inverse(b)));
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (gcd_normalized(factors[i], factors[j]).degree() != 0) return false;
  return true;
}

/// Components a^j_i = sum_k a_{kn+i} b_j^{kn+i}, one period-n sequence per root.
///
/// Operation budget, 3(u-1)N in total: a^0 by plain sums ((u-1)N/u additions);
/// for each j >= 1 the powers b_j^0..b_j^{N-1} incrementally (under N
/// multiplications) and then each entry with u multiplications and u-1 additions.
inline std::vector<PeriodicSequence> decompose(const PeriodicSequence& s, const ReductionPlan& plan) {
  if (s.field() != plan.field) throw Error(ErrorCode::MixedFields, "sequence and plan use different fields");
  if (s.period() != plan.period)
    throw Error(ErrorCode::PeriodMismatch, "sequence period " + std::to_string(s.period()) +
                                               " but plan expects " + std::to_string(plan.period));
  const auto a = s.elements();
  const std::size_t u = plan.u, n = plan.n, total = plan.period;

  std::vector<PeriodicSequence> out;
  out.reserve(u);

  Tuple first(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = 1; k < u; ++k)
    for (std::size_t i = 0; i < n; ++i) first[i] += a[k * n + i];
  out.emplace_back(plan.field, std::move(first));

  Tuple powers(total, plan.field.one());
  for (std::size_t j = 1; j < u; ++j) {
    const FieldElement& b = plan.roots_b[j];
    if (total > 1) powers[1] = b;
    for (std::size_t t = 2; t < total; ++t) powers[t] = powers[t - 1] * b;

    Tuple component;
    component.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      FieldElement acc = a[i] * powers[i];
      for (std::size_t k = 1; k < u; ++k) acc += a[k * n + i] * powers[k * n + i];
      component.push_back(acc);
    }
    out.emplace_back(plan.field, std::move(component));
  }
  return out;
}

/// c = sum c_j and m(x) = prod m_j(b_j^{-1} x), with results[j] solving component j.
inline LinCompResult compose(std::span<const LinCompResult> results, const ReductionPlan& plan) {
  if (results.size() != plan.u)
    throw Error(ErrorCode::ArityMismatch,
                std::to_string(results.size()) + " results for " + std::to_string(plan.u) + " components");
  OpScope ops;
  std::size_t c = 0;
  Poly m = Poly::one(plan.field);
  for (std::size_t j = 0; j < results.size(); ++j) {
    c += results[j].complexity;
    if (results[j].min_poly.degree() > 0) m = m * scale_argument(results[j].min_poly, inverse(plan.roots_b[j]));
  }
  return {c, std::move(m), Algorithm::Reduction, ops.total()};
}

/// Games-Chan when the period is a power of the characteristic, Berlekamp-Massey otherwise.
inline LinCompResult solve_direct(const PeriodicSequence& s) {
  if (nt::exact_log(s.period(), s.field().characteristic())) return ggc_lincomp(s);
  return berlekamp_massey(s);
}

/// What a reduction run did, phase by phase.
struct ReductionTrace {
  ReductionPlan plan;
  std::vector<PeriodicSequence> components;
  std::vector<LinCompResult> component_results;
  std::uint64_t decompose_ops = 0;
  std::uint64_t component_ops = 0;
  std::uint64_t compose_ops = 0;
};

struct Solution {
  LinCompResult result;
  std::optional<ReductionTrace> trace;  // present iff the reduction ran
};

/// Decompose, solve every component directly, recompose.
inline Solution solve_with_plan(const PeriodicSequence& s, const ReductionPlan& plan) {
  ReductionTrace trace{plan, {}, {}, 0, 0, 0};
  {
    OpScope ops;
    trace.components = decompose(s, plan);
    trace.decompose_ops = ops.total();
  }
  {
    OpScope ops;
    trace.component_results.reserve(plan.u);
    for (const auto& component : trace.components) trace.component_results.push_back(solve_direct(component));
    trace.component_ops = ops.total();
  }
  LinCompResult result = compose(trace.component_results, plan);
  trace.compose_ops = result.field_ops;
  result.field_ops = trace.decompose_ops + trace.component_ops + trace.compose_ops;
  return {std::move(result), std::move(trace)};
}

/// Reduction when the period admits one, otherwise a direct solver on the whole period.
inline Solution solve_auto_traced(const PeriodicSequence& s) {
  auto outcome = plan_reduction(s.field(), s.period());
  if (auto* plan = std::get_if<ReductionPlan>(&outcome)) return solve_with_plan(s, *plan);
  return {solve_direct(s), std::nullopt};
}

inline LinCompResult solve_auto(const PeriodicSequence& s) { return solve_auto_traced(s).result; }

/// Period-2n sequence a_0..a_{n-1}, -a_0..-a_{n-1} solved through the period-n
/// sequence a'_i = 2 a_i b^i, where b^n = -1.
struct AntisymmetricSolution {
  PeriodicSequence half;  // a'
  FieldElement b;
  LinCompResult half_result;
  LinCompResult result;  // c(a) = c(a'), m(a)(x) = m(a')(b x)
};

inline bool is_antisymmetric(const PeriodicSequence& s) {
  if (s.period() % 2 != 0) return false;
  const std::size_t n = s.period() / 2;
  const FieldElement zero = s.field().zero();
  for (std::size_t i = 0; i < n; ++i)
    if (s[n + i] != zero - s[i]) return false;
  return true;
}

inline AntisymmetricSolution solve_antisymmetric(const PeriodicSequence& s) {
  const FieldSpec& field = s.field();
  if (field.characteristic() == 2)
    throw Error(ErrorCode::AlgorithmInapplicable, "antisymmetric shortcut needs an odd characteristic");
  if (!is_antisymmetric(s))
    throw Error(ErrorCode::AlgorithmInapplicable, "second half of the period is not the negated first half");
  const std::size_t n = s.period() / 2;
  // For odd n, b = -1 satisfies b^n = -1 and is its own inverse, so scaling by
  // b or b^{-1} agree. Even n would need a different b and the b^{-1} form.
  if (n % 2 == 0) throw Error(ErrorCode::AlgorithmInapplicable, "antisymmetric shortcut needs an odd half-period");
  const FieldElement b = -field.one();

  std::vector<FieldElement> half;
  half.reserve(n);
  const FieldElement two = field.from_int(2);
  FieldElement power = field.one();
  for (std::size_t i = 0; i < n; ++i) {
    half.push_back(two * s[i] * power);
    power = power * b;
  }
  PeriodicSequence half_seq(field, std::move(half));
  LinCompResult half_result = solve_auto(half_seq);
  LinCompResult result{half_result.complexity, scale_argument(half_result.min_poly, b), Algorithm::Reduction,
                       half_result.field_ops};
  return {std::move(half_seq), b, std::move(half_result), std::move(result)};
}

}  // namespace lincomp
