#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "op_count.hpp"
#include "poly.hpp"
#include "sequence.hpp"

namespace lincomp {

/// Shortest LFSR generating `prefix` (Massey's discrepancy iteration).
///
/// The returned polynomial C satisfies a_n + C_1 a_{n-1} + ... + C_L a_{n-L} = 0
/// along the prefix, with L the reported complexity. For an arbitrary prefix
/// deg C may fall short of L; for two full periods of a periodic sequence the
/// answer is the minimal connection polynomial and deg C = L.
inline LinCompResult berlekamp_massey(const FieldSpec& field, std::span<const FieldElement> prefix) {
  if (prefix.empty()) throw Error(ErrorCode::EmptyPrefix, "Berlekamp-Massey needs at least one element");
  for (const auto& e : prefix)
    if (e.field() != field) throw Error(ErrorCode::MixedFields, "prefix element outside " + field.name());

  OpScope ops;
  std::vector<FieldElement> conn{field.one()};  // current connection polynomial
  std::vector<FieldElement> prev{field.one()};  // polynomial before the last length change
  FieldElement prev_discrepancy = field.one();
  std::size_t length = 0;
  std::size_t shift = 1;

  for (std::size_t n = 0; n < prefix.size(); ++n) {
    FieldElement d = prefix[n];
    const std::size_t terms = std::min(length, conn.size() - 1);
    for (std::size_t i = 1; i <= terms; ++i) d += conn[i] * prefix[n - i];
    if (d.is_zero()) {
      ++shift;
      continue;
    }

    const FieldElement coef = d * inverse(prev_discrepancy);
    const bool grow = 2 * length <= n;
    std::vector<FieldElement> saved;
    if (grow) saved = conn;
    if (conn.size() < prev.size() + shift) conn.resize(prev.size() + shift, field.zero());
    for (std::size_t i = 0; i < prev.size(); ++i) conn[i + shift] -= coef * prev[i];

    if (grow) {
      length = n + 1 - length;
      prev = std::move(saved);
      prev_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  return {length, Poly(field, std::move(conn)), Algorithm::BerlekampMassey, ops.total()};
}

/// Berlekamp-Massey over two full periods, which always suffices since c <= N.
inline LinCompResult berlekamp_massey(const PeriodicSequence& s) {
  const auto prefix = s.prefix(2 * s.period());
  return berlekamp_massey(s.field(), prefix);
}

}  // namespace lincomp
