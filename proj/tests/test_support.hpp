#pragma once

// Shared helpers for the test suites: seeded generators and brute-force
// reference computations kept independent of the library's fast paths.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <lincomp/lincomp.hpp>

namespace lincomp::testing {

inline FieldElement random_element(const FieldSpec& f, std::mt19937_64& rng) {
  return f.from_index(rng() % f.size());
}

inline PeriodicSequence random_sequence(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<FieldElement> period;
  period.reserve(n);
  for (std::size_t i = 0; i < n; ++i) period.push_back(random_element(f, rng));
  return PeriodicSequence(f, std::move(period));
}

inline Poly random_poly(const FieldSpec& f, std::size_t max_degree, std::mt19937_64& rng) {
  const std::size_t len = rng() % (max_degree + 2);
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < len; ++i) c.push_back(random_element(f, rng));
  return Poly(f, std::move(c));
}

/// Multiplicative order by repeated multiplication.
inline std::uint64_t brute_order(const FieldElement& a) {
  std::uint64_t k = 1;
  FieldElement cur = a;
  while (!cur.is_one()) {
    cur = cur * a;
    ++k;
  }
  return k;
}

/// All monic polynomials' coefficient vectors (low first) with a root in GF(p), m <= 3 check.
inline bool has_root_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + coeffs[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

/// Shortest recurrence by exhaustive search over connection polynomials
/// 1 + d_1 x + ... + d_k x^k in order of increasing k; tiny fields only.
inline std::size_t brute_force_complexity(const PeriodicSequence& s) {
  const FieldSpec& f = s.field();
  const auto elems = f.elements();
  for (std::size_t k = 0;; ++k) {
    std::vector<std::size_t> digits(k, 0);
    while (true) {
      std::vector<FieldElement> coeffs{f.one()};
      for (auto d : digits) coeffs.push_back(elems[d]);
      if (verify_recurrence(s, Poly(f, coeffs))) return k;
      std::size_t pos = 0;
      while (pos < k && ++digits[pos] == elems.size()) digits[pos++] = 0;
      if (pos == k) break;
    }
  }
}

/// Elementwise sequence description for assertion messages.
inline std::string describe(const PeriodicSequence& s) {
  std::ostringstream os;
  for (const auto& e : s.elements()) os << e << ' ';
  return os.str();
}

}  // namespace lincomp::testing
