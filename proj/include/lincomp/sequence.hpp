#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "op_count.hpp"
#include "poly.hpp"

namespace lincomp {

/// One full period a_0..a_{N-1} of an infinitely repeated sequence over GF(p^m).
class PeriodicSequence {
 public:
  PeriodicSequence(FieldSpec field, std::vector<FieldElement> period)
      : field_(field), period_(std::move(period)) {
    if (period_.empty()) throw Error(ErrorCode::EmptyPeriod, "a period needs at least one element");
    for (const auto& e : period_)
      if (e.field() != field_) throw Error(ErrorCode::MixedFields, "sequence element outside " + field_.name());
  }

  /// Period from prime-subfield integers.
  static PeriodicSequence from_ints(FieldSpec field, std::span<const std::int64_t> values) {
    std::vector<FieldElement> period;
    period.reserve(values.size());
    for (auto v : values) period.push_back(field.from_int(v));
    return PeriodicSequence(field, std::move(period));
  }
  static PeriodicSequence from_ints(FieldSpec field, std::initializer_list<std::int64_t> values) {
    return from_ints(field, std::span<const std::int64_t>(values.begin(), values.size()));
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t period() const noexcept { return period_.size(); }
  std::span<const FieldElement> elements() const noexcept { return period_; }
  /// a_i for any i >= 0, wrapping around the period.
  const FieldElement& operator[](std::size_t i) const noexcept { return period_[i % period_.size()]; }

  /// The first `count` terms of the infinite sequence.
  std::vector<FieldElement> prefix(std::size_t count) const {
    std::vector<FieldElement> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back((*this)[i]);
    return out;
  }

  bool is_zero() const noexcept {
    for (const auto& e : period_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

 private:
  FieldSpec field_;
  std::vector<FieldElement> period_;
};

enum class Algorithm { Oracle, BerlekampMassey, GamesChan, Reduction };

constexpr std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Oracle: return "oracle";
    case Algorithm::BerlekampMassey: return "bm";
    case Algorithm::GamesChan: return "ggc";
    case Algorithm::Reduction: return "reduction";
  }
  return "unknown";
}

/// Linear complexity c and minimal connection polynomial m = 1 - (c_1 x + ... + c_c x^c).
struct LinCompResult {
  std::size_t complexity;
  Poly min_poly;
  Algorithm algorithm;
  std::uint64_t field_ops = 0;
};

/// a_0 + a_1 x + ... + a_{N-1} x^{N-1}
inline Poly generating_poly(const PeriodicSequence& s) {
  return Poly(s.field(), std::vector<FieldElement>(s.elements().begin(), s.elements().end()));
}

/// Reference solver: c = N - deg gcd(f, 1 - x^N) and m = (1 - x^N) / gcd.
inline LinCompResult oracle_lincomp(const PeriodicSequence& s) {
  OpScope ops;
  const Poly f = generating_poly(s);
  if (f.is_zero()) return {0, Poly::one(s.field()), Algorithm::Oracle, 0};
  const Poly period_poly = one_minus_x_pow(s.field(), s.period());
  const Poly d = gcd_normalized(f, period_poly);
  Poly m = period_poly / d;
  const std::size_t c = s.period() - static_cast<std::size_t>(d.degree());
  return {c, std::move(m), Algorithm::Oracle, ops.total()};
}

/// True iff a_{i+k} = c_1 a_{i+k-1} + ... + c_k a_i for every i in [0, 2N), where
/// m = 1 - (c_1 x + ... + c_k x^k). Indices wrap around the period.
inline bool verify_recurrence(const PeriodicSequence& s, const Poly& m) {
  if (m.field() != s.field()) throw Error(ErrorCode::MixedFields, "connection polynomial over another field");
  if (m.is_zero() || !m.constant_term().is_one())
    throw Error(ErrorCode::BadConnectionPoly, "connection polynomial must have constant term 1");
  const std::size_t k = static_cast<std::size_t>(m.degree());
  const std::size_t n = s.period();
  for (std::size_t i = 0; i < 2 * n; ++i) {
    // a_{i+k} + sum_j m_j a_{i+k-j} must vanish (m_j = -c_j).
    FieldElement acc = s[i + k];
    for (std::size_t j = 1; j <= k; ++j) acc += m[j] * s[i + k - j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace lincomp
