#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace lincomp;
using lincomp::testing::random_element;
using lincomp::testing::random_poly;

namespace {

const FieldSpec& gf7() {
  static const FieldSpec f = make_field(7, 1);
  return f;
}

Poly ints7(std::initializer_list<std::int64_t> v) { return Poly::from_ints(gf7(), v); }

bool divides(const Poly& d, const Poly& f) { return (f % d).is_zero(); }

// Every monic polynomial of degree 1..max_degree over a small field.
std::vector<Poly> all_monic(const FieldSpec& f, std::size_t max_degree) {
  std::vector<Poly> out;
  const auto elems = f.elements();
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<std::size_t> digits(d, 0);
    while (true) {
      std::vector<FieldElement> c;
      for (auto i : digits) c.push_back(elems[i]);
      c.push_back(f.one());
      out.emplace_back(f, std::move(c));
      std::size_t pos = 0;
      while (pos < d && ++digits[pos] == elems.size()) digits[pos++] = 0;
      if (pos == d) break;
    }
  }
  return out;
}

}  // namespace

TEST(PolyBasics, TrimsTrailingZerosAndReportsDegree) {
  const Poly p = ints7({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(ints7({0, 0}).is_zero());
  EXPECT_EQ(ints7({}).degree(), Poly::kZeroDegree);
  EXPECT_EQ(p[5], gf7().zero());
}

TEST(PolyArith, Examples) {
  EXPECT_EQ(ints7({1, -1}) * ints7({1, 1}), ints7({1, 0, -1}));
  const Poly f = ints7({3, 1, 4});
  EXPECT_EQ(f + Poly(gf7()), f);
  EXPECT_EQ(f - f, Poly(gf7()));

  const auto [q, r] = divrem(one_minus_x_pow(gf7(), 7), ints7({1, -1}));
  EXPECT_EQ(q, ints7({1, 1, 1, 1, 1, 1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q * ints7({1, -1}), one_minus_x_pow(gf7(), 7));
}

TEST(PolyArith, Errors) {
  try {
    (void)divrem(ints7({1, 2}), Poly(gf7()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivideByZeroPoly);
  }
  try {
    (void)(ints7({1}) + Poly::one(make_field(13, 1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedFields);
  }
}

TEST(PolyArith, DivremRoundTrip) {
  std::mt19937_64 rng(11);
  for (const auto& f : {make_field(7, 1), make_field(3, 2)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Poly a = random_poly(f, 12, rng);
      Poly b = random_poly(f, 6, rng);
      if (b.is_zero()) b = Poly::one(f);
      const auto [q, r] = divrem(a, b);
      ASSERT_EQ(q * b + r, a);
      ASSERT_LT(r.degree(), b.degree());
    }
  }
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(gcd_normalized(one_minus_x_pow(gf7(), 7), ints7({1, -1})), ints7({1, -1}));
  const Poly f = ints7({2, 5, 1, 3});
  EXPECT_EQ(gcd_normalized(f, Poly::one(gf7())), Poly::one(gf7()));
  const Poly self = gcd_normalized(f, f);
  EXPECT_TRUE(self.constant_term().is_one());
  EXPECT_EQ(scalar_mul(self, gf7().from_int(2)), f);
  // No constant term: normalized monic.
  EXPECT_EQ(gcd_normalized(ints7({0, 3}), ints7({0, 0, 5})), ints7({0, 1}));
  try {
    (void)gcd_normalized(Poly(gf7()), Poly(gf7()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BothZero);
  }
}

TEST(PolyGcd, IsGreatestCommonDivisorByExhaustiveDivisorSearch) {
  std::mt19937_64 rng(5);
  const FieldSpec f = make_field(3, 1);
  const auto candidates = all_monic(f, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly common = random_poly(f, 2, rng);
    if (common.is_zero()) continue;
    const Poly a = common * random_poly(f, 3, rng);
    const Poly b = common * random_poly(f, 3, rng);
    if (a.is_zero() && b.is_zero()) continue;
    const Poly g = gcd_normalized(a, b);
    EXPECT_TRUE(divides(g, a));
    EXPECT_TRUE(divides(g, b));
    for (const auto& d : candidates) {
      if (divides(d, a) && divides(d, b)) {
        EXPECT_TRUE(divides(d, g));
      }
    }
  }
}

TEST(PolyGcd, NonzeroConstantTermIsPreserved) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    Poly f = random_poly(gf7(), 10, rng);
    if (f.constant_term().is_zero()) f = f + Poly::one(gf7());
    const std::size_t n = 1 + rng() % 20;
    const Poly g = gcd_normalized(f, one_minus_x_pow(gf7(), n));
    EXPECT_TRUE(g.constant_term().is_one());
  }
}

TEST(ScaleArgument, Examples) {
  EXPECT_EQ(scale_argument(ints7({1, -1}), gf7().from_int(4)), ints7({1, -4}));
  const Poly f = ints7({3, 0, 6, 1});
  EXPECT_EQ(scale_argument(f, gf7().one()), f);
  EXPECT_EQ(scale_argument(one_minus_x_pow(gf7(), 7), gf7().from_int(2)), ints7({1, 0, 0, 0, 0, 0, 0, -2}));
  try {
    (void)scale_argument(f, gf7().zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroScale);
  }
}

TEST(ScaleArgument, InverseAndMultiplicativeProperties) {
  std::mt19937_64 rng(3);
  for (const auto& f : {make_field(7, 1), make_field(3, 2), make_field(13, 1)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Poly a = random_poly(f, 10, rng), b = random_poly(f, 10, rng);
      FieldElement s = random_element(f, rng);
      if (s.is_zero()) s = f.one();
      EXPECT_EQ(scale_argument(scale_argument(a, s), inverse(s)), a);
      EXPECT_EQ(scale_argument(a * b, s), scale_argument(a, s) * scale_argument(b, s));
      EXPECT_EQ(scale_argument(a, s).degree(), a.degree());
    }
  }
}

TEST(ScaleArgument, UsesOneMultiplicationPerCoefficient) {
  const Poly f = ints7({1, 2, 3, 4, 5});
  OpScope ops;
  (void)scale_argument(f, gf7().from_int(3));
  // 4 coefficient products plus 3 incremental powers.
  EXPECT_EQ(ops.counts().multiplications, 7u);
}

TEST(PolyPow, Examples) {
  EXPECT_EQ(pow(ints7({1, -1}), 7), one_minus_x_pow(gf7(), 7));
  const Poly f = ints7({2, 3, 1});
  EXPECT_EQ(pow(f, 0), Poly::one(gf7()));
  EXPECT_EQ(pow(f, 1), f);
  EXPECT_EQ(pow(f, 3), f * f * f);
}

TEST(PolyPow, BinomialExpansionMatchesRepeatedSquaring) {
  for (const auto& f : {make_field(7, 1), make_field(2, 1), make_field(3, 2), make_field(13, 1)}) {
    const Poly one_minus_x = Poly(f, {f.one(), -f.one()});
    for (std::uint64_t k = 0; k <= 60; ++k) ASSERT_EQ(binomial_power(f, k), pow(one_minus_x, k)) << f.name() << k;
  }
}

TEST(PolyPow, BinomialExpansionCountsNoFieldOperations) {
  OpScope ops;
  (void)binomial_power(gf7(), 343);
  EXPECT_EQ(ops.total(), 0u);
}
