#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"
#include "op_count.hpp"

namespace lincomp {

/// Fields larger than this are refused; modulus and primitive-element
/// searches are exhaustive and the log/antilog tables are dense.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

class FieldSpec;
class FieldElement;

namespace detail {

// Element encoding: coordinates c_0..c_{m-1} packed as the integer sum c_i p^i.
struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t size = 0;  // p^m
  std::uint32_t q = 0;     // p^m - 1
  std::vector<std::uint32_t> modulus;
  std::uint32_t primitive = 0;
  std::vector<std::uint32_t> exp_table;  // g^i for i in [0, q)
  std::vector<std::uint32_t> log_table;  // inverse of exp_table; slot 0 unused
};

using ZpPoly = std::vector<std::uint32_t>;

inline void zp_trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, std::uint32_t p) {
  zp_trim(a);
  const std::uint64_t lead_inv = *nt::inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
    zp_trim(a);
  }
  return a;
}

inline ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return zp_rem(std::move(prod), f, p);
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint32_t p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    ZpPoly r = zp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Monic f of degree m is irreducible over GF(p) iff gcd(f, x^{p^k} - x) = 1 for 1 <= k <= m/2.
inline bool zp_is_irreducible(const ZpPoly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return m == 1;
  ZpPoly x_power = zp_rem(ZpPoly{0, 1}, f, p);  // x^{p^k} mod f
  for (std::size_t k = 1; 2 * k <= m; ++k) {
    ZpPoly acc{1};
    for (std::uint32_t i = 0; i < p; ++i) acc = zp_mulmod(acc, x_power, f, p);
    x_power = acc;
    ZpPoly diff = x_power;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (zp_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> unpack(std::uint32_t value, std::uint32_t p, std::uint32_t m) {
  std::vector<std::uint32_t> c(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    c[i] = value % p;
    value /= p;
  }
  return c;
}

inline std::uint32_t pack(std::span<const std::uint32_t> coords, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = coords.size(); i-- > 0;) v = v * p + coords[i];
  return v;
}

// The r-th coordinate vector in lexicographic order with c_0 most significant.
inline std::vector<std::uint32_t> lex_low_first(std::uint64_t r, std::uint32_t p, std::uint32_t len) {
  std::vector<std::uint32_t> c(len);
  for (std::uint32_t i = len; i-- > 0;) {
    c[i] = static_cast<std::uint32_t>(r % p);
    r /= p;
  }
  return c;
}

// Schoolbook multiply modulo the defining polynomial; used only while building tables.
inline std::uint32_t slow_mul(const FieldData& f, std::uint32_t a, std::uint32_t b) {
  const auto ca = unpack(a, f.p, f.m), cb = unpack(b, f.p, f.m);
  ZpPoly prod(2 * f.m - 1, 0);
  for (std::uint32_t i = 0; i < f.m; ++i)
    for (std::uint32_t j = 0; j < f.m; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % f.p);
  for (std::size_t d = prod.size(); d-- > f.m;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= f.m; ++i) {
      auto& slot = prod[d - f.m + i];
      slot = static_cast<std::uint32_t>((slot + f.p - c * f.modulus[i] % f.p) % f.p);
    }
  }
  prod.resize(f.m);
  return pack(prod, f.p);
}

inline std::uint32_t slow_pow(const FieldData& f, std::uint32_t a, std::uint64_t e) {
  std::uint32_t result = 1;
  while (e) {
    if (e & 1) result = slow_mul(f, result, a);
    a = slow_mul(f, a, a);
    e >>= 1;
  }
  return result;
}

inline void build_tables(FieldData& f) {
  const auto primes = nt::factorize(f.q);
  for (std::uint64_t r = 1; r < f.size; ++r) {
    const std::uint32_t g = pack(lex_low_first(r, f.p, f.m), f.p);
    if (g == 0) continue;
    bool primitive = slow_pow(f, g, f.q) == 1;
    for (const auto& [prime, mult] : primes)
      primitive = primitive && slow_pow(f, g, f.q / prime) != 1;
    if (primitive) {
      f.primitive = g;
      break;
    }
  }
  f.exp_table.resize(f.q);
  f.log_table.assign(f.size, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < f.q; ++i) {
    f.exp_table[i] = cur;
    f.log_table[cur] = i;
    cur = slow_mul(f, cur, f.primitive);
  }
}

inline const FieldData* intern_field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
  static std::mutex mutex;
  static std::map<std::vector<std::uint32_t>, std::unique_ptr<FieldData>> registry;

  std::vector<std::uint32_t> key{p, m};
  key.insert(key.end(), modulus.begin(), modulus.end());
  std::lock_guard lock(mutex);
  auto& slot = registry[key];
  if (!slot) {
    auto f = std::make_unique<FieldData>();
    f->p = p;
    f->m = m;
    f->size = static_cast<std::uint32_t>(nt::ipow(p, m));
    f->q = f->size - 1;
    f->modulus = std::move(modulus);
    build_tables(*f);
    slot = std::move(f);
  }
  return slot.get();
}

inline std::uint32_t add_index(const FieldData& f, std::uint32_t a, std::uint32_t b) noexcept {
  if (f.m == 1) {
    const std::uint32_t s = a + b;
    return s >= f.p ? s - f.p : s;
  }
  if (f.p == 2) return a ^ b;
  std::uint32_t r = 0, w = 1;
  for (std::uint32_t i = 0; i < f.m; ++i) {
    r += ((a % f.p + b % f.p) % f.p) * w;
    a /= f.p;
    b /= f.p;
    w *= f.p;
  }
  return r;
}

inline std::uint32_t neg_index(const FieldData& f, std::uint32_t a) noexcept {
  if (f.m == 1) return a == 0 ? 0 : f.p - a;
  if (f.p == 2) return a;
  std::uint32_t r = 0, w = 1;
  for (std::uint32_t i = 0; i < f.m; ++i) {
    r += ((f.p - a % f.p) % f.p) * w;
    a /= f.p;
    w *= f.p;
  }
  return r;
}

}  // namespace detail

/// A validated finite field GF(p^m) in polynomial basis over GF(p).
///
/// Specs are interned: two specs built from the same (p, m, modulus) refer to
/// the same immutable tables and compare equal. Interned fields live for the
/// rest of the process, so elements may outlive the spec object that made them.
class FieldSpec {
 public:
  std::uint32_t characteristic() const noexcept { return data_->p; }
  std::uint32_t degree() const noexcept { return data_->m; }
  /// Monic defining polynomial, m+1 coefficients low degree first.
  std::span<const std::uint32_t> modulus() const noexcept { return data_->modulus; }
  /// q = p^m - 1, the order of the multiplicative group.
  std::uint64_t order_minus_one() const noexcept { return data_->q; }
  std::uint32_t size() const noexcept { return data_->size; }

  FieldElement zero() const noexcept;
  FieldElement one() const noexcept;
  /// k reduced into the prime subfield GF(p).
  FieldElement from_int(std::int64_t k) const noexcept;
  /// Element from its packed index (sum c_i p^i).
  FieldElement from_index(std::uint64_t index) const;
  FieldElement element(std::span<const std::uint32_t> coords) const;
  /// All p^m elements in index order.
  std::vector<FieldElement> elements() const;

  std::string name() const {
    return degree() == 1 ? "GF(" + std::to_string(characteristic()) + ")"
                         : "GF(" + std::to_string(characteristic()) + "^" + std::to_string(degree()) + ")";
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept { return a.data_ == b.data_; }

 private:
  explicit FieldSpec(const detail::FieldData* data) noexcept : data_(data) {}

  friend class FieldElement;
  friend FieldElement primitive_element(const FieldSpec&);
  friend std::vector<FieldElement> uth_roots_of_unity(const FieldSpec&, std::uint64_t);
  friend FieldSpec make_field(std::uint64_t, std::uint32_t, std::optional<std::vector<std::uint32_t>>);

  const detail::FieldData* data_;
};

/// One element of GF(p^m). Arithmetic operators count as field operations.
class FieldElement {
 public:
  FieldSpec field() const noexcept { return FieldSpec(f_); }
  std::uint32_t index() const noexcept { return v_; }
  std::vector<std::uint32_t> coords() const { return detail::unpack(v_, f_->p, f_->m); }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.f_ == b.f_ && a.v_ == b.v_;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    detail::count_add();
    return {a.f_, detail::add_index(*a.f_, a.v_, b.v_)};
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    detail::count_sub();
    return {a.f_, detail::add_index(*a.f_, a.v_, detail::neg_index(*a.f_, b.v_))};
  }

  FieldElement operator-() const {
    detail::count_sub();
    return {f_, detail::neg_index(*f_, v_)};
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    detail::count_mul();
    if (a.v_ == 0 || b.v_ == 0) return {a.f_, 0};
    const std::uint64_t s = std::uint64_t{a.f_->log_table[a.v_]} + a.f_->log_table[b.v_];
    return {a.f_, a.f_->exp_table[s % a.f_->q]};
  }

  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend FieldElement inverse(const FieldElement& a) {
    if (a.v_ == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero in " + a.field().name());
    detail::count_inv();
    const std::uint32_t q = a.f_->q;
    return {a.f_, a.f_->exp_table[(q - a.f_->log_table[a.v_]) % q]};
  }

  // Discrete logarithm base the canonical primitive element; not a counted operation.
  std::uint32_t log() const {
    if (v_ == 0) throw Error(ErrorCode::ZeroElement, "logarithm of zero");
    return f_->log_table[v_];
  }

 private:
  FieldElement(const detail::FieldData* f, std::uint32_t v) noexcept : f_(f), v_(v) {}

  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (a.f_ != b.f_)
      throw Error(ErrorCode::MixedFields, "operands from " + a.field().name() + " and " + b.field().name());
  }

  friend class FieldSpec;
  friend FieldElement primitive_element(const FieldSpec&);
  friend std::vector<FieldElement> uth_roots_of_unity(const FieldSpec&, std::uint64_t);
  friend FieldElement nth_root_coprime(const FieldElement&, std::uint64_t);

  const detail::FieldData* f_;
  std::uint32_t v_;
};

inline FieldElement FieldSpec::zero() const noexcept { return {data_, 0}; }
inline FieldElement FieldSpec::one() const noexcept { return {data_, 1}; }

inline FieldElement FieldSpec::from_int(std::int64_t k) const noexcept {
  const auto p = static_cast<std::int64_t>(data_->p);
  return {data_, static_cast<std::uint32_t>(((k % p) + p) % p)};
}

inline FieldElement FieldSpec::from_index(std::uint64_t index) const {
  if (index >= data_->size)
    throw Error(ErrorCode::ElementOutOfRange, std::to_string(index) + " is not an element of " + name());
  return {data_, static_cast<std::uint32_t>(index)};
}

inline FieldElement FieldSpec::element(std::span<const std::uint32_t> coords) const {
  if (coords.size() != data_->m)
    throw Error(ErrorCode::BadLength, name() + " elements have " + std::to_string(data_->m) + " coordinates");
  for (auto c : coords)
    if (c >= data_->p)
      throw Error(ErrorCode::ElementOutOfRange,
                  "coordinate " + std::to_string(c) + " outside [0, " + std::to_string(data_->p) + ")");
  return {data_, detail::pack(coords, data_->p)};
}

inline std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(data_->size);
  for (std::uint32_t v = 0; v < data_->size; ++v) out.push_back({data_, v});
  return out;
}

/// a^e by square-and-multiply; negative exponents invert first.
inline FieldElement pow(const FieldElement& a, std::int64_t e) {
  if (e < 0) return pow(inverse(a), -e);
  if (e == 0) return a.field().one();
  std::uint64_t ue = static_cast<std::uint64_t>(e);
  int top = 63;
  while (!((ue >> top) & 1)) --top;
  FieldElement r = a;
  for (int bit = top - 1; bit >= 0; --bit) {
    r = r * r;
    if ((ue >> bit) & 1) r = r * a;
  }
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  const auto c = a.coords();
  if (c.size() == 1) return os << c[0];
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os << ']';
}

/// Validates and interns GF(p^m). Without a modulus the lexicographically
/// smallest monic irreducible (coefficients compared low degree first) is used.
inline FieldSpec make_field(std::uint64_t p, std::uint32_t m,
                            std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  if (!nt::is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    size *= p;
    if (size > kMaxFieldSize)
      throw Error(ErrorCode::FieldTooLarge, "p^m exceeds " + std::to_string(kMaxFieldSize));
  }
  const auto p32 = static_cast<std::uint32_t>(p);

  std::vector<std::uint32_t> chosen;
  if (modulus) {
    if (modulus->size() != m + 1)
      throw Error(ErrorCode::DegreeMismatch, "modulus must have " + std::to_string(m + 1) + " coefficients");
    for (auto c : *modulus)
      if (c >= p) throw Error(ErrorCode::InvalidModulus, "modulus coefficient out of range");
    if (modulus->back() != 1) throw Error(ErrorCode::InvalidModulus, "modulus must be monic");
    if (!detail::zp_is_irreducible(*modulus, p32))
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
    chosen = *modulus;
  } else {
    for (std::uint64_t r = 0;; ++r) {
      auto candidate = detail::lex_low_first(r, p32, m);
      candidate.push_back(1);
      if (detail::zp_is_irreducible(candidate, p32)) {
        chosen = std::move(candidate);
        break;
      }
    }
  }
  return FieldSpec(detail::intern_field(p32, m, std::move(chosen)));
}

/// Smallest element (coordinates compared low degree first) of multiplicative order q.
inline FieldElement primitive_element(const FieldSpec& spec) { return {spec.data_, spec.data_->primitive}; }

/// x_i = g^{i q / u} for the canonical primitive element g, so x_0 = 1.
inline std::vector<FieldElement> uth_roots_of_unity(const FieldSpec& spec, std::uint64_t u) {
  const auto& f = *spec.data_;
  if (u == 0 || f.q % u != 0)
    throw Error(ErrorCode::NotADivisor,
                std::to_string(u) + " does not divide " + std::to_string(f.q) + " in " + spec.name());
  std::vector<FieldElement> roots;
  roots.reserve(u);
  const std::uint64_t step = f.q / u;
  for (std::uint64_t i = 0; i < u; ++i) roots.push_back({&f, f.exp_table[i * step]});
  return roots;
}

/// The unique b with b^n = x, computed as x^{n^{-1} mod q}; requires gcd(n, q) = 1.
inline FieldElement nth_root_coprime(const FieldElement& x, std::uint64_t n) {
  const auto& f = *x.f_;
  const auto n_inv = nt::inverse_mod(n, f.q);
  if (n == 0 || !n_inv)
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + std::to_string(n) + ", " + std::to_string(f.q) + ") != 1 in " + x.field().name());
  if (x.v_ == 0) throw Error(ErrorCode::ZeroElement, "zero has no n-th root in the multiplicative group");
  if (f.q == 1) return x;
  return {&f, f.exp_table[std::uint64_t{f.log_table[x.v_]} * *n_inv % f.q]};
}

}  // namespace lincomp
