#include <gtest/gtest.h>

#include <random>

#include <arithcorr/gf2poly.hpp>

#include "brute_force.hpp"

namespace arithcorr {
namespace {

Gf2Poly P(const char* text) { return parse_poly(text); }

TEST(Gf2Poly, ParsesHexAndMonomialForms) {
  EXPECT_EQ(P("0x13"), Gf2Poly(0x13));
  EXPECT_EQ(P("x^4+x+1"), Gf2Poly(0x13));
  EXPECT_EQ(P("1 + X + X^4"), Gf2Poly(0x13));
  EXPECT_EQ(P("X^10+X^3+1"), Gf2Poly(0x409));
  EXPECT_EQ(P("0X409"), Gf2Poly(0x409));
  EXPECT_EQ(P("x"), Gf2Poly::x());
}

TEST(Gf2Poly, RejectsMalformedText) {
  for (const char* bad : {"", "0x", "0xZZ", "x^", "x^4++1", "y^2+1", "x^4+x^4+1", "x^64+1", "2x+1"}) {
    EXPECT_THROW(parse_poly(bad), std::invalid_argument) << bad;
  }
}

TEST(Gf2Poly, FormatsHexAndMonomial) {
  EXPECT_EQ(to_hex(Gf2Poly(0x13)), "0x13");
  EXPECT_EQ(to_monomial(Gf2Poly(0x13)), "x^4+x+1");
  EXPECT_EQ(to_monomial(Gf2Poly(0x2)), "x");
  EXPECT_EQ(to_monomial(Gf2Poly()), "0");
  EXPECT_EQ(Gf2Poly().degree(), -1);
  EXPECT_EQ(Gf2Poly(0x409).degree(), 10);
}

TEST(Gf2Poly, TextFormsRoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const Gf2Poly p(rng() | 1U);
    EXPECT_EQ(parse_poly(to_hex(p)), p);
    EXPECT_EQ(parse_poly(to_monomial(p)), p);
  }
}

TEST(PolymodMul, Examples) {
  EXPECT_EQ(polymod_mul(P("x"), P("x"), P("x^2+x+1")), P("x+1"));
  const Gf2Poly m = P("x^3+x+1");
  const Gf2Poly b = P("x^5+x^2");
  EXPECT_EQ(polymod_mul(Gf2Poly::one(), b, m), poly_mod(b, m));
  EXPECT_EQ(polymod_mul(P("x^2"), P("x^2"), m), P("x^2+x"));
  EXPECT_THROW(polymod_mul(P("x"), P("x"), Gf2Poly::one()), std::invalid_argument);
}

TEST(PolymodMul, CommutativeAndAssociative) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned n = 1 + rng() % 63;
    const Gf2Poly m((std::uint64_t{1} << n) | (rng() & ((std::uint64_t{1} << n) - 1)));
    const Gf2Poly a(rng()), b(rng()), c(rng());
    EXPECT_EQ(polymod_mul(a, b, m), polymod_mul(b, a, m));
    EXPECT_EQ(polymod_mul(polymod_mul(a, b, m), c, m), polymod_mul(a, polymod_mul(b, c, m), m));
  }
}

TEST(PolymodMul, MatchesSchoolbookProductAtSmallDegrees) {
  for (std::uint64_t m = 0b100; m < 0x200; ++m) {
    for (std::uint64_t a = 0; a < 32; a += 3) {
      for (std::uint64_t b = 0; b < 32; b += 5) {
        std::uint64_t product = 0;
        for (unsigned i = 0; i < 6; ++i) {
          if (b >> i & 1U) product ^= a << i;
        }
        ASSERT_EQ(polymod_mul(Gf2Poly(a), Gf2Poly(b), Gf2Poly(m)).coeffs(), brute::poly_mod(product, m));
      }
    }
  }
}

TEST(IsIrreducible, Examples) {
  EXPECT_FALSE(is_irreducible(P("x^2+1")));
  EXPECT_TRUE(is_irreducible(P("x^4+x+1")));
  EXPECT_TRUE(is_irreducible(P("x^4+x^3+x^2+x+1")));
  EXPECT_TRUE(is_irreducible(P("x")));
  EXPECT_THROW(is_irreducible(Gf2Poly::one()), std::invalid_argument);
}

TEST(IsIrreducible, AgreesWithTrialDivisionUpToDegree12) {
  for (std::uint64_t p = 2; p < (std::uint64_t{1} << 13); ++p) {
    ASSERT_EQ(is_irreducible(Gf2Poly(p)), brute::irreducible(p)) << to_hex(Gf2Poly(p));
  }
}

TEST(FactorByTrialDivision, Examples) {
  EXPECT_EQ(factor_by_trial_division(15).factors, (std::vector<PrimeFactor>{{3, 1}, {5, 1}}));
  EXPECT_EQ(factor_by_trial_division(511).factors, (std::vector<PrimeFactor>{{7, 1}, {73, 1}}));
  EXPECT_EQ(factor_by_trial_division(31).factors, (std::vector<PrimeFactor>{{31, 1}}));
  EXPECT_EQ(factor_by_trial_division(4095).factors,
            (std::vector<PrimeFactor>{{3, 2}, {5, 1}, {7, 1}, {13, 1}}));
}

TEST(FactorByTrialDivision, RejectsOutOfRange) {
  EXPECT_THROW(factor_by_trial_division(0), std::out_of_range);
  EXPECT_THROW(factor_by_trial_division(1), std::out_of_range);
  EXPECT_THROW(factor_by_trial_division(std::uint64_t{1} << 63), std::out_of_range);
}

TEST(FactorByTrialDivision, ProductReconstructsValueAndFactorsArePrime) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t v = 2 + rng() % 100'000'000;
    const Factorization f = factor_by_trial_division(v);
    std::uint64_t product = 1;
    for (const auto& pf : f.factors) {
      for (unsigned e = 0; e < pf.exponent; ++e) product *= pf.prime;
      for (std::uint64_t d = 2; d * d <= pf.prime; ++d) ASSERT_NE(pf.prime % d, 0u);
    }
    EXPECT_EQ(product, v);
  }
  for (unsigned n = 2; n <= 40; ++n) {
    const std::uint64_t v = (std::uint64_t{1} << n) - 1;
    std::uint64_t product = 1;
    for (const auto& pf : factor_by_trial_division(v).factors) {
      for (unsigned e = 0; e < pf.exponent; ++e) product *= pf.prime;
    }
    EXPECT_EQ(product, v);
  }
}

TEST(EulerPhi, MatchesGcdCount) {
  for (std::uint64_t m = 2; m < 3000; m += 7) {
    EXPECT_EQ(euler_phi(factor_by_trial_division(m)), brute::phi_by_gcd(m)) << m;
  }
}

TEST(IsPrimitive, Examples) {
  EXPECT_TRUE(is_primitive(P("x^4+x+1")));
  EXPECT_FALSE(is_primitive(P("x^4+x^3+x^2+x+1")));
  EXPECT_TRUE(is_primitive(P("x^10+x^3+1")));
  EXPECT_FALSE(is_primitive(P("x^4+x^2+x")));
  EXPECT_THROW(is_primitive(P("x+1")), std::invalid_argument);
}

TEST(IsPrimitive, PolynomialsNamedForDegreesTenToThirteen) {
  for (const char* p : {"x^10+x^3+1", "x^10+x^4+x^3+x+1", "x^11+x^5+x^3+x+1", "x^11+x^5+x^3+x^2+1",
                        "x^12+x^6+x^4+x+1", "x^12+x^6+x^5+x^3+1", "x^13+x^5+x^4+x^2+1",
                        "x^13+x^6+x^4+x+1"}) {
    EXPECT_TRUE(is_primitive(P(p))) << p;
  }
}

TEST(OrderOfX, CyclotomicQuinticHasOrderFive) {
  EXPECT_EQ(order_of_x(P("x^4+x^3+x^2+x+1")), 5u);
  EXPECT_EQ(order_of_x(P("x^4+x+1")), 15u);
  EXPECT_THROW(order_of_x(P("x^2+1")), std::invalid_argument);
}

TEST(EnumeratePrimitive, TableCounts) {
  EXPECT_EQ(enumerate_primitive(5).size(), 6u);
  EXPECT_EQ(enumerate_primitive(6).size(), 6u);
  EXPECT_EQ(enumerate_primitive(7).size(), 18u);
  EXPECT_EQ(enumerate_primitive(8).size(), 16u);
  EXPECT_EQ(enumerate_primitive(9).size(), 48u);
}

TEST(EnumeratePrimitive, CountIsPhiOverDegree) {
  for (unsigned n = 2; n <= 20; ++n) {
    const std::uint64_t group = (std::uint64_t{1} << n) - 1;
    const std::uint64_t expected = brute::phi_by_gcd(group) / n;
    EXPECT_EQ(enumerate_primitive(n, 0).size(), expected) << "n=" << n;
  }
}

TEST(EnumeratePrimitive, MatchesSteppingOrderOracleAndIsSorted) {
  for (unsigned n = 2; n <= 12; ++n) {
    std::vector<std::uint64_t> got;
    for (auto p : enumerate_primitive(n, 3)) got.push_back(p.coeffs());
    EXPECT_EQ(got, brute::primitive_list(n)) << "n=" << n;
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(EnumeratePrimitive, RejectedIrreduciblesHaveProperDivisorOrder) {
  for (unsigned n = 2; n <= 12; ++n) {
    const auto listed = enumerate_primitive(n);
    const std::uint64_t group = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t low = 1; low < (std::uint64_t{1} << n); low += 2) {
      const Gf2Poly p((std::uint64_t{1} << n) | low);
      const bool primitive = std::binary_search(listed.begin(), listed.end(), p);
      EXPECT_EQ(primitive, is_primitive(p));
      if (primitive) EXPECT_TRUE(is_irreducible(p));
      if (!primitive && is_irreducible(p)) {
        const std::uint64_t order = order_of_x(p);
        EXPECT_LT(order, group);
        EXPECT_EQ(group % order, 0u);
      }
    }
  }
}

TEST(EnumeratePrimitive, RejectsDegreesOutsideSweepRange) {
  EXPECT_THROW(enumerate_primitive(1), std::out_of_range);
  EXPECT_THROW(enumerate_primitive(21), std::out_of_range);
}

TEST(EnumeratePrimitive, OrderIndependentOfWorkerCount) {
  EXPECT_EQ(enumerate_primitive(14, 1), enumerate_primitive(14, 7));
}

}  // namespace
}  // namespace arithcorr
