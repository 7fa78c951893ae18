#pragma once

#include <cassert>
#include <optional>
#include <span>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "number_theory.hpp"
#include "op_count.hpp"
#include "poly.hpp"
#include "sequence.hpp"

// Generalized Games-Chan algorithm for sequences of period p^h over GF(p^m),
// p the characteristic. Each level folds a p^h-tuple into p tuples of length
// p^{h-1} and keeps the first nonzero one, accumulating the complexity.

namespace lincomp {

using Tuple = std::vector<FieldElement>;

/// Working state of the folding loop: the current p^h-tuple, the level h and
/// the complexity accumulated so far.
struct GgcState {
  Tuple s;
  unsigned h = 0;
  std::size_t c = 0;
  bool finished = false;
};

namespace detail {

inline bool all_zero(std::span<const FieldElement> t) noexcept {
  for (const auto& e : t)
    if (!e.is_zero()) return false;
  return true;
}

inline unsigned ggc_level(std::size_t length, std::uint32_t p) {
  const auto h = nt::exact_log(length, p);
  if (!h) throw Error(ErrorCode::BadLength, "tuple length " + std::to_string(length) + " is not a power of " +
                                                std::to_string(p));
  return *h;
}

}  // namespace detail

/// Splits s into blocks s^(0..p-1) of length p^{h-1} and returns
/// b^(mu) = sum_{j=0}^{p-mu-1} C(p-j-1, mu) s^(j) for mu = 0..p-1 (binomials mod p).
inline std::vector<Tuple> ggc_fold(std::span<const FieldElement> s, const FieldSpec& field) {
  for (const auto& e : s)
    if (e.field() != field)
      throw Error(ErrorCode::WrongCharacteristic, "tuple element outside " + field.name());
  const std::uint32_t p = field.characteristic();
  const unsigned h = detail::ggc_level(s.size(), p);
  if (h == 0) throw Error(ErrorCode::BadLength, "cannot fold a tuple of length 1");

  const std::size_t block = s.size() / p;
  const nt::BinomialModP binom(p);
  std::vector<Tuple> b(p, Tuple(block, field.zero()));
  for (std::uint32_t mu = 0; mu < p; ++mu) {
    auto& out = b[mu];
    for (std::uint32_t j = 0; j + mu < p; ++j) {
      const std::uint32_t coef = binom(p - j - 1, mu);
      const auto src = s.subspan(j * block, block);
      if (j == 0) {
        if (coef == 1) {
          std::copy(src.begin(), src.end(), out.begin());
        } else {
          const FieldElement k = field.from_int(coef);
          for (std::size_t i = 0; i < block; ++i) out[i] = k * src[i];
        }
      } else if (coef == 1) {
        for (std::size_t i = 0; i < block; ++i) out[i] += src[i];
      } else {
        const FieldElement k = field.from_int(coef);
        for (std::size_t i = 0; i < block; ++i) out[i] += k * src[i];
      }
    }
  }
  return b;
}

/// Number of w in {1..p} with b^(0) = ... = b^(p-w-1) = 0 and b^(p-w) != 0.
inline std::size_t ggc_admissible_count(std::span<const Tuple> b) {
  const std::size_t p = b.size();
  std::size_t count = 0;
  for (std::size_t w = 1; w <= p; ++w) {
    bool ok = !detail::all_zero(b[p - w]);
    for (std::size_t mu = 0; ok && mu + w < p; ++mu) ok = detail::all_zero(b[mu]);
    count += ok;
  }
  return count;
}

inline GgcState ggc_start(const PeriodicSequence& s) {
  const std::uint32_t p = s.field().characteristic();
  const std::size_t n = s.period();
  const auto h = nt::exact_log(n, p);
  if (!h) {
    const auto factors = nt::factorize(n);
    if (factors.size() == 1)
      throw Error(ErrorCode::WrongCharacteristic, "period " + std::to_string(n) + " is a power of " +
                                                      std::to_string(factors[0].first) + ", not of the characteristic " +
                                                      std::to_string(p));
    throw Error(ErrorCode::NotPrimePowerPeriod,
                "period " + std::to_string(n) + " is not a power of the characteristic " + std::to_string(p));
  }
  return {Tuple(s.elements().begin(), s.elements().end()), *h, 0, false};
}

/// One level of the loop; returns false once the state is final.
inline bool ggc_step(GgcState& st, const FieldSpec& field) {
  if (st.finished) return false;
  if (st.h == 0) {
    if (!st.s[0].is_zero()) ++st.c;
    st.finished = true;
    return false;
  }
  const std::uint32_t p = field.characteristic();
  auto b = ggc_fold(st.s, field);
  std::optional<std::size_t> first_nonzero;
  for (std::size_t mu = 0; mu < b.size() && !first_nonzero; ++mu)
    if (!detail::all_zero(b[mu])) first_nonzero = mu;
  if (!first_nonzero) {
    // s was all-zero: nothing further contributes.
    st.finished = true;
    return false;
  }
  assert(ggc_admissible_count(b) == 1);
  const std::size_t w = p - *first_nonzero;
  st.c += (w - 1) * nt::ipow(p, st.h - 1);
  st.s = std::move(b[*first_nonzero]);
  --st.h;
  return true;
}

/// Linear complexity of a period-p^h sequence; m = (1 - x)^c since
/// 1 - x^{p^h} = (1 - x)^{p^h} in characteristic p. Only the folding is
/// counted; m is expanded from binomials without field operations.
inline LinCompResult ggc_lincomp(const PeriodicSequence& s) {
  GgcState st = ggc_start(s);
  OpScope ops;
  while (ggc_step(st, s.field())) {
  }
  return {st.c, binomial_power(s.field(), st.c), Algorithm::GamesChan, ops.total()};
}

}  // namespace lincomp
