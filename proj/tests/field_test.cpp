#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace lincomp;
using lincomp::testing::brute_order;

namespace {

std::vector<std::uint64_t> indices(const std::vector<FieldElement>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& e : v) out.push_back(e.index());
  return out;
}

// First monic polynomial (low coefficients compared first) with no root in GF(p).
std::vector<std::uint32_t> brute_smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  std::vector<std::uint32_t> c(m + 1, 0);
  c[m] = 1;
  // Lexicographic with c_0 most significant: the last free coordinate varies fastest.
  while (true) {
    if (!lincomp::testing::has_root_mod_p(c, p)) return c;
    std::size_t pos = m;
    while (pos-- > 0) {
      if (++c[pos] < p) break;
      c[pos] = 0;
    }
  }
}

}  // namespace

TEST(MakeField, PrimeFieldUsesPlaceholderModulus) {
  const auto f = make_field(7, 1);
  EXPECT_EQ(f.characteristic(), 7u);
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_EQ(f.order_minus_one(), 6u);
  EXPECT_EQ(std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end()),
            (std::vector<std::uint32_t>{0, 1}));
}

TEST(MakeField, SmallestIrreducibleQuadraticOverGF3) {
  // Oracle: enumerate monic quadratics in canonical order, keep the first without a root.
  const auto expected = brute_smallest_irreducible(3, 2);
  EXPECT_EQ(expected, (std::vector<std::uint32_t>{1, 0, 1}));  // x^2 + 1
  const auto f = make_field(3, 2);
  EXPECT_EQ(f.order_minus_one(), 8u);
  EXPECT_EQ(std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end()), expected);
}

TEST(MakeField, CanonicalModulusMatchesRootFreeSearchForCubicsAndQuadratics) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t m : {2u, 3u}) {
      const auto f = make_field(p, m);
      EXPECT_EQ(std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end()),
                brute_smallest_irreducible(p, m))
          << "p=" << p << " m=" << m;
    }
  }
}

TEST(MakeField, InterningGivesEqualSpecs) {
  EXPECT_EQ(make_field(3, 2), make_field(3, 2, std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_NE(make_field(3, 2), make_field(3, 2, std::vector<std::uint32_t>{2, 1, 1}));
}

TEST(MakeField, Errors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code_of([] { make_field(4, 1); }), ErrorCode::NonPrime);
  EXPECT_EQ(code_of([] { make_field(1, 1); }), ErrorCode::NonPrime);
  EXPECT_EQ(code_of([] { make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}); }),
            ErrorCode::ReducibleModulus);  // (x + 1)^2
  EXPECT_EQ(code_of([] { make_field(3, 2, std::vector<std::uint32_t>{1, 1}); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(code_of([] { make_field(3, 2, std::vector<std::uint32_t>{1, 0, 2}); }), ErrorCode::InvalidModulus);
  EXPECT_EQ(code_of([] { make_field(2, 21); }), ErrorCode::FieldTooLarge);
}

TEST(MakeField, QuarticReducibleWithoutRootsIsRejected) {
  // (x^2 + x + 1)^2 = x^4 + x^2 + 1 over GF(2) has no root but is reducible.
  EXPECT_FALSE(lincomp::testing::has_root_mod_p({1, 0, 1, 0, 1}, 2));
  try {
    make_field(2, 4, std::vector<std::uint32_t>{1, 0, 1, 0, 1});
    FAIL() << "expected ReducibleModulus";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ReducibleModulus);
  }
  EXPECT_NO_THROW(make_field(2, 4, std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
}

TEST(FieldArithmetic, PrimeFieldExamples) {
  const auto f = make_field(7, 1);
  EXPECT_EQ(f.from_int(3) + f.from_int(5), f.from_int(1));
  EXPECT_EQ(f.from_int(4) * f.from_int(2), f.from_int(1));
  EXPECT_EQ(pow(f.from_int(2), 7), f.from_int(2));
  EXPECT_EQ(f.from_int(2) - f.from_int(5), f.from_int(4));
  EXPECT_EQ(inverse(f.from_int(3)), f.from_int(5));
  EXPECT_EQ(pow(f.from_int(3), -1), f.from_int(5));
  EXPECT_EQ(pow(f.from_int(0), 0), f.one());
}

TEST(FieldArithmetic, ExtensionFieldCoordinates) {
  const auto f = make_field(3, 2);  // x^2 + 1
  const std::vector<std::uint32_t> xc{0, 1};
  const auto x = f.element(xc);
  EXPECT_EQ((x * x).coords(), (std::vector<std::uint32_t>{2, 0}));  // x^2 = -1
  const std::vector<std::uint32_t> ac{1, 2};
  const auto a = f.element(ac);
  EXPECT_EQ((a + a).coords(), (std::vector<std::uint32_t>{2, 1}));
  EXPECT_EQ((-a).coords(), (std::vector<std::uint32_t>{2, 1}));
}

TEST(FieldArithmetic, Errors) {
  const auto f7 = make_field(7, 1);
  const auto f13 = make_field(13, 1);
  try {
    (void)inverse(f7.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInverse);
  }
  try {
    (void)(f7.one() + f13.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedFields);
  }
  EXPECT_THROW((void)f7.from_index(7), Error);
  const std::vector<std::uint32_t> bad{7};
  EXPECT_THROW((void)f7.element(bad), Error);
}

// Field axioms checked exhaustively over every pair/triple of elements.
class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const auto [p, m] = GetParam();
  const auto f = make_field(p, m);
  const auto all = f.elements();
  for (const auto& a : all) {
    EXPECT_EQ(a + f.zero(), a);
    EXPECT_EQ(a * f.one(), a);
    EXPECT_EQ(a + (-a), f.zero());
    if (!a.is_zero()) {
      EXPECT_EQ(a * inverse(a), f.one());
    }
    for (const auto& b : all) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a - b) + b, a);
      for (const auto& c : all) {
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{7u, 1u}, std::pair{13u, 1u}, std::pair{3u, 2u},
                                           std::pair{2u, 3u}));

TEST(FieldArithmetic, MultiplicationAgreesWithSchoolbookReduction) {
  // Log-table multiplication against direct polynomial multiply-and-reduce.
  const auto f = make_field(5, 2);
  const auto mod = f.modulus();
  for (const auto& a : f.elements()) {
    for (const auto& b : f.elements()) {
      const auto ca = a.coords(), cb = b.coords();
      std::vector<std::uint64_t> prod(3, 0);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) prod[i + j] += ca[i] * cb[j];
      // x^2 = -(mod[0] + mod[1] x)
      std::vector<std::uint32_t> r{static_cast<std::uint32_t>((prod[0] + 5 * 25 - prod[2] % 5 * mod[0]) % 5),
                                   static_cast<std::uint32_t>((prod[1] + 5 * 25 - prod[2] % 5 * mod[1]) % 5)};
      ASSERT_EQ((a * b).coords(), r);
    }
  }
}

TEST(PrimitiveElement, Examples) {
  EXPECT_EQ(primitive_element(make_field(7, 1)), make_field(7, 1).from_int(3));
  EXPECT_EQ(primitive_element(make_field(2, 1)), make_field(2, 1).one());
  EXPECT_EQ(primitive_element(make_field(13, 1)), make_field(13, 1).from_int(2));
  // Brute-force orders behind the GF(7) answer.
  const auto f = make_field(7, 1);
  EXPECT_EQ(brute_order(f.from_int(2)), 3u);
  EXPECT_EQ(brute_order(f.from_int(3)), 6u);
}

TEST(PrimitiveElement, IsSmallestOfFullOrderInCanonicalOrder) {
  for (auto [p, m] : {std::pair{3u, 2u}, std::pair{2u, 4u}, std::pair{5u, 2u}, std::pair{17u, 1u}, std::pair{2u, 5u}}) {
    const auto f = make_field(p, m);
    auto elems = f.elements();
    std::sort(elems.begin(), elems.end(), [](const FieldElement& a, const FieldElement& b) {
      return a.coords() < b.coords();  // lexicographic, c_0 first
    });
    std::optional<FieldElement> expected;
    for (const auto& e : elems)
      if (!e.is_zero() && brute_order(e) == f.order_minus_one()) {
        expected = e;
        break;
      }
    ASSERT_TRUE(expected);
    EXPECT_EQ(primitive_element(f), *expected) << f.name();
  }
}

TEST(RootsOfUnity, Examples) {
  const auto f = make_field(7, 1);
  EXPECT_EQ(indices(uth_roots_of_unity(f, 3)), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(indices(uth_roots_of_unity(f, 1)), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(indices(uth_roots_of_unity(make_field(3, 2), 1)), (std::vector<std::uint64_t>{1}));
  try {
    uth_roots_of_unity(f, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotADivisor);
  }
}

TEST(RootsOfUnity, AreDistinctAndMatchBruteForce) {
  for (auto [p, m] : {std::pair{7u, 1u}, std::pair{13u, 1u}, std::pair{3u, 2u}, std::pair{2u, 4u}}) {
    const auto f = make_field(p, m);
    const auto q = f.order_minus_one();
    for (std::uint64_t u = 1; u <= q; ++u) {
      if (q % u) continue;
      const auto roots = uth_roots_of_unity(f, u);
      ASSERT_EQ(roots.size(), u);
      EXPECT_TRUE(roots[0].is_one());
      std::set<std::uint64_t> distinct;
      for (const auto& x : roots) {
        EXPECT_TRUE(pow(x, static_cast<std::int64_t>(u)).is_one());
        distinct.insert(x.index());
      }
      std::set<std::uint64_t> brute;
      for (const auto& e : f.elements())
        if (!e.is_zero() && pow(e, static_cast<std::int64_t>(u)).is_one()) brute.insert(e.index());
      EXPECT_EQ(distinct, brute) << f.name() << " u=" << u;
    }
  }
}

TEST(NthRoot, Examples) {
  const auto f = make_field(7, 1);
  EXPECT_EQ(nth_root_coprime(f.from_int(2), 7), f.from_int(2));
  EXPECT_EQ(nth_root_coprime(f.from_int(6), 7), f.from_int(6));
  EXPECT_EQ(nth_root_coprime(f.one(), 5), f.one());
  EXPECT_EQ(nth_root_coprime(make_field(3, 2).one(), 7), make_field(3, 2).one());
  try {
    nth_root_coprime(f.from_int(2), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCoprime);
  }
  try {
    nth_root_coprime(f.zero(), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroElement);
  }
}

TEST(NthRoot, UniqueByExhaustiveSearchOnSmallFields) {
  for (std::uint32_t size = 2; size <= 49; ++size) {
    const auto factors = nt::factorize(size);
    if (factors.size() != 1) continue;
    const auto f = make_field(factors[0].first, factors[0].second);
    const auto q = f.order_minus_one();
    for (std::uint64_t n = 1; n <= 2 * q + 1; ++n) {
      if (std::gcd(n, q) != 1) continue;
      for (const auto& x : f.elements()) {
        if (x.is_zero()) continue;
        const auto b = nth_root_coprime(x, n);
        std::vector<FieldElement> roots;
        for (const auto& e : f.elements())
          if (pow(e, static_cast<std::int64_t>(n)) == x) roots.push_back(e);
        ASSERT_EQ(roots.size(), 1u) << f.name() << " n=" << n;
        EXPECT_EQ(roots[0], b);
      }
    }
  }
}

TEST(OpCounter, CountsEachOperationExactly) {
  const auto f = make_field(13, 1);
  const auto a = f.from_int(5), b = f.from_int(7);
  OpScope outer;
  {
    OpScope inner;
    FieldElement acc = a;
    for (int k = 0; k < 17; ++k) acc = acc * b;
    EXPECT_EQ(inner.counts().multiplications, 17u);
    EXPECT_EQ(inner.total(), 17u);
  }
  (void)(a + b);
  (void)(a - b);
  (void)inverse(a);
  EXPECT_EQ(outer.counts().multiplications, 17u);
  EXPECT_EQ(outer.counts().additions, 1u);
  EXPECT_EQ(outer.counts().subtractions, 1u);
  EXPECT_EQ(outer.counts().inversions, 1u);
  EXPECT_EQ(outer.total(), 20u);
}

TEST(OpCounter, PowCountsItsMultiplications) {
  const auto f = make_field(7, 1);
  OpScope ops;
  (void)pow(f.from_int(3), 13);  // 1101b: three squarings, two extra multiplications
  EXPECT_EQ(ops.counts().multiplications, 5u);
}

TEST(OpCounter, NothingCountedOutsideScopes) {
  const auto f = make_field(7, 1);
  (void)(f.one() * f.one());
  OpScope ops;
  EXPECT_EQ(ops.total(), 0u);
}
