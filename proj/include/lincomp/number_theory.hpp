#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

// Integer helpers for desk-scale moduli (everything fits comfortably in 64 bits).

namespace lincomp::nt {

inline bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// (prime, multiplicity) pairs in increasing prime order, by trial division.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Largest e with r^e | n (n > 0, r > 1).
inline unsigned valuation(std::uint64_t n, std::uint64_t r) noexcept {
  unsigned e = 0;
  while (n != 0 && n % r == 0) {
    n /= r;
    ++e;
  }
  return e;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

/// Returns h with base^h == n, if n is a power of base.
inline std::optional<unsigned> exact_log(std::uint64_t n, std::uint64_t base) noexcept {
  if (n == 0 || base < 2) return std::nullopt;
  unsigned h = 0;
  while (n % base == 0) {
    n /= base;
    ++h;
  }
  if (n != 1) return std::nullopt;
  return h;
}

/// Inverse of a modulo mod, when gcd(a, mod) == 1.
inline std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t mod) noexcept {
  if (mod == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(mod), new_r = static_cast<std::int64_t>(a % mod);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - quot * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - quot * new_r};
  }
  if (r != 1) return std::nullopt;
  if (t < 0) t += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(t);
}

/// Binomial coefficients reduced mod a prime p, via factorial tables for
/// arguments below p and Lucas' theorem beyond.
class BinomialModP {
 public:
  explicit BinomialModP(std::uint32_t p) : p_(p), fact_(p), inv_fact_(p) {
    fact_[0] = 1;
    for (std::uint32_t i = 1; i < p; ++i) fact_[i] = fact_[i - 1] * i % p;
    inv_fact_[p - 1] = *inverse_mod(fact_[p - 1], p);
    for (std::uint32_t i = p - 1; i > 0; --i) inv_fact_[i - 1] = inv_fact_[i] * i % p;
  }

  std::uint32_t operator()(std::uint64_t n, std::uint64_t k) const noexcept {
    std::uint64_t r = 1;
    while (n || k) {
      const std::uint64_t nd = n % p_, kd = k % p_;
      if (kd > nd) return 0;
      r = r * fact_[nd] % p_ * inv_fact_[kd] % p_ * inv_fact_[nd - kd] % p_;
      n /= p_;
      k /= p_;
    }
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t prime() const noexcept { return p_; }

 private:
  std::uint32_t p_;
  std::vector<std::uint64_t> fact_;
  std::vector<std::uint64_t> inv_fact_;
};

}  // namespace lincomp::nt
