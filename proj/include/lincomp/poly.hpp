#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "number_theory.hpp"

namespace lincomp {

struct DivRem;

/// Dense univariate polynomial over GF(p^m), coefficients indexed by degree.
///
/// The coefficient vector never ends in a zero, so the zero polynomial has no
/// coefficients and degree() reports kZeroDegree for it.
class Poly {
 public:
  static constexpr std::ptrdiff_t kZeroDegree = -1;

  explicit Poly(FieldSpec field) noexcept : field_(field) {}

  Poly(FieldSpec field, std::vector<FieldElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
      if (c.field() != field_) throw Error(ErrorCode::MixedFields, "coefficient outside " + field_.name());
    trim();
  }

  static Poly constant(const FieldElement& c) { return Poly(c.field(), {c}); }
  static Poly one(FieldSpec field) { return constant(field.one()); }

  /// c * x^k
  static Poly monomial(const FieldElement& c, std::size_t k) {
    std::vector<FieldElement> coeffs(k + 1, c.field().zero());
    coeffs[k] = c;
    return Poly(c.field(), std::move(coeffs));
  }

  /// Builds from prime-subfield integers, low degree first.
  static Poly from_ints(FieldSpec field, std::span<const std::int64_t> values) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(values.size());
    for (auto v : values) coeffs.push_back(field.from_int(v));
    return Poly(field, std::move(coeffs));
  }
  static Poly from_ints(FieldSpec field, std::initializer_list<std::int64_t> values) {
    return from_ints(field, std::span<const std::int64_t>(values.begin(), values.size()));
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

  /// Coefficient of x^i; zero beyond the degree.
  FieldElement operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : field_.zero();
  }
  FieldElement leading() const noexcept { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }
  FieldElement constant_term() const noexcept { return (*this)[0]; }

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  friend Poly operator+(const Poly&, const Poly&);
  friend Poly operator-(const Poly&, const Poly&);
  friend Poly operator*(const Poly&, const Poly&);
  friend Poly scale_argument(const Poly&, const FieldElement&);
  friend DivRem divrem(const Poly&, const Poly&);

  FieldSpec field_;
  std::vector<FieldElement> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

namespace detail {
inline void check_same(const Poly& f, const Poly& g) {
  if (f.field() != g.field())
    throw Error(ErrorCode::MixedFields, "polynomials over " + f.field().name() + " and " + g.field().name());
}
}  // namespace detail

inline Poly operator+(const Poly& f, const Poly& g) {
  detail::check_same(f, g);
  const Poly& longer = f.coeffs_.size() >= g.coeffs_.size() ? f : g;
  const Poly& shorter = &longer == &f ? g : f;
  std::vector<FieldElement> out = longer.coeffs_;
  for (std::size_t i = 0; i < shorter.coeffs_.size(); ++i) out[i] = out[i] + shorter.coeffs_[i];
  return Poly(f.field_, std::move(out));
}

inline Poly operator-(const Poly& f, const Poly& g) {
  detail::check_same(f, g);
  std::vector<FieldElement> out = f.coeffs_;
  if (out.size() < g.coeffs_.size()) out.resize(g.coeffs_.size(), f.field_.zero());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) out[i] = out[i] - g.coeffs_[i];
  return Poly(f.field_, std::move(out));
}

inline Poly operator*(const Poly& f, const Poly& g) {
  detail::check_same(f, g);
  if (f.is_zero() || g.is_zero()) return Poly(f.field_);
  std::vector<FieldElement> out(f.coeffs_.size() + g.coeffs_.size() - 1, f.field_.zero());
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return Poly(f.field_, std::move(out));
}

/// Schoolbook long division: f = quotient * g + remainder, deg remainder < deg g.
inline DivRem divrem(const Poly& f, const Poly& g) {
  detail::check_same(f, g);
  if (g.is_zero()) throw Error(ErrorCode::DivideByZeroPoly, "division by the zero polynomial");
  const auto& fs = f.field_;
  if (f.degree() < g.degree()) return {Poly(fs), f};

  std::vector<FieldElement> rem = f.coeffs_;
  const std::size_t dg = g.coeffs_.size() - 1;
  std::vector<FieldElement> quot(rem.size() - dg, fs.zero());
  const FieldElement& lead = g.coeffs_.back();
  const FieldElement lead_inv = lead.is_one() ? lead : inverse(lead);
  for (std::size_t k = rem.size(); k-- > dg;) {
    if (rem[k].is_zero()) continue;
    const FieldElement c = lead.is_one() ? rem[k] : rem[k] * lead_inv;
    quot[k - dg] = c;
    for (std::size_t i = 0; i < dg; ++i) rem[k - dg + i] -= c * g.coeffs_[i];
    rem[k] = fs.zero();
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dg), rem.end());
  return {Poly(fs, std::move(quot)), Poly(fs, std::move(rem))};
}

inline Poly operator/(const Poly& f, const Poly& g) { return divrem(f, g).quotient; }
inline Poly operator%(const Poly& f, const Poly& g) { return divrem(f, g).remainder; }

/// f multiplied by the scalar c.
inline Poly scalar_mul(const Poly& f, const FieldElement& c) {
  std::vector<FieldElement> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& e : out) e = e * c;
  return Poly(f.field(), std::move(out));
}

/// Euclidean gcd, scaled to constant term 1 when that term is nonzero, monic otherwise.
inline Poly gcd_normalized(Poly f, Poly g) {
  detail::check_same(f, g);
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  while (!g.is_zero()) {
    Poly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  const FieldElement c0 = f.constant_term();
  const FieldElement norm = c0.is_zero() ? f.leading() : c0;
  return norm.is_one() ? f : scalar_mul(f, inverse(norm));
}

/// f(s x): the coefficient of x^i is multiplied by s^i, powers built incrementally.
inline Poly scale_argument(const Poly& f, const FieldElement& s) {
  if (s.field() != f.field()) throw Error(ErrorCode::MixedFields, "scale outside " + f.field().name());
  if (s.is_zero()) throw Error(ErrorCode::ZeroScale, "argument scale must be nonzero");
  std::vector<FieldElement> out = f.coeffs_;
  FieldElement power = s;
  for (std::size_t i = 1; i < out.size(); ++i) {
    out[i] = out[i] * power;
    if (i + 1 < out.size()) power = power * s;
  }
  return Poly(f.field_, std::move(out));
}

/// f^k by square-and-multiply; f^0 = 1.
inline Poly pow(const Poly& f, std::uint64_t k) {
  Poly result = Poly::one(f.field());
  Poly base = f;
  bool first = true;
  while (k) {
    if (k & 1) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

/// 1 - x^n
inline Poly one_minus_x_pow(FieldSpec field, std::size_t n) {
  std::vector<FieldElement> coeffs(n + 1, field.zero());
  coeffs[0] = field.one();
  coeffs[n] = coeffs[n] - field.one();
  return Poly(field, std::move(coeffs));
}

/// (1 - x)^k expanded from binomial coefficients mod p (Lucas' theorem); integer
/// arithmetic only, so no field operations are counted.
inline Poly binomial_power(FieldSpec field, std::uint64_t k) {
  const std::uint32_t p = field.characteristic();
  const nt::BinomialModP binom(p);
  std::vector<FieldElement> coeffs;
  coeffs.reserve(k + 1);
  for (std::uint64_t i = 0; i <= k; ++i) {
    const std::int64_t c = binom(k, i);
    coeffs.push_back(field.from_int(i % 2 ? -c : c));
  }
  return Poly(field, std::move(coeffs));
}

/// Evaluates f at a point (Horner).
inline FieldElement evaluate(const Poly& f, const FieldElement& at) {
  FieldElement acc = f.field().zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * at + f.coeffs()[i];
  return acc;
}

}  // namespace lincomp
