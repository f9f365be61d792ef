#include <gtest/gtest.h>

#include <random>

#include "gzbt/arith/finite_field_poly.hpp"
#include "gzbt/arith/galois_field.hpp"
#include "gzbt/arith/integer_factor.hpp"
#include "gzbt/arith/parse.hpp"
#include "gzbt/arith/rational_functions.hpp"
#include "gzbt/arith/rationals.hpp"

using namespace gzbt;

TEST(GaloisField, PrimeFieldArithmetic) {
  GaloisField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.neg(2), 5u);
  EXPECT_FALSE(f.is_square(3));
  EXPECT_TRUE(f.is_square(2));  // 3^2 = 9 = 2
}

TEST(GaloisField, ExtensionFieldAxioms) {
  for (auto [p, r] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}}) {
    GaloisField f(p, r);
    const auto q = f.order();
    for (GaloisField::Elem a = 1; a < q; ++a) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      EXPECT_EQ(f.pow(a, q - 1), 1u);
    }
    // distributivity on a sample
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
      auto a = f.random(rng, 0), b = f.random(rng, 0), c = f.random(rng, 0);
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    }
  }
}

TEST(GaloisField, Char2SquareRootAndTrace) {
  GaloisField f(2, 3);
  for (GaloisField::Elem a = 0; a < 8; ++a) EXPECT_EQ(f.mul(f.sqrt_char2(a), f.sqrt_char2(a)), a);
  int ones = 0;
  for (GaloisField::Elem a = 0; a < 8; ++a) ones += f.trace(a);
  EXPECT_EQ(ones, 4);  // trace is a surjective F2-linear form
}

TEST(Polynomial, DivmodAndGcd) {
  Rationals q;
  poly::Poly<Rationals> a{q.from_int(-1), q.zero(), q.one()};  // x^2 - 1
  poly::Poly<Rationals> b{q.from_int(1), q.one()};              // x + 1
  auto [quo, rem] = poly::divmod(q, a, b);
  EXPECT_TRUE(rem.empty());
  EXPECT_EQ(poly::to_string(q, quo, "x"), "x-1");
  auto g = poly::gcd(q, a, poly::Poly<Rationals>{q.from_int(-1), q.one()});
  EXPECT_EQ(poly::degree<Rationals>(g), 1);
}

TEST(FiniteFieldPoly, FactorsRecombine) {
  GaloisField f(3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    poly::GFPoly a(1 + rng() % 9, 0);
    for (auto& c : a) c = f.random(rng, 0);
    a.back() = 1;
    poly::trim(f, a);
    if (poly::degree<GaloisField>(a) <= 0) continue;
    poly::GFPoly prod{1};
    for (auto& [g, m] : poly::factor(f, a)) {
      EXPECT_TRUE(poly::is_irreducible(f, g));
      prod = poly::mul(f, prod, poly::pow(f, g, m));
    }
    EXPECT_TRUE(poly::equal(f, prod, poly::monic(f, a)));
  }
}

TEST(FiniteFieldPoly, IrreducibleCounts) {
  // number of monic irreducibles of degree d over GF(q): (1/d) sum mu(d/e) q^e
  GaloisField f2(2), f3(3), f4(2, 2);
  EXPECT_EQ(poly::monic_irreducibles(f2, 1).size(), 2u);
  EXPECT_EQ(poly::monic_irreducibles(f2, 2).size(), 1u);
  EXPECT_EQ(poly::monic_irreducibles(f2, 3).size(), 2u);
  EXPECT_EQ(poly::monic_irreducibles(f2, 4).size(), 3u);
  EXPECT_EQ(poly::monic_irreducibles(f3, 2).size(), 3u);
  EXPECT_EQ(poly::monic_irreducibles(f3, 3).size(), 8u);
  EXPECT_EQ(poly::monic_irreducibles(f4, 2).size(), 6u);
}

TEST(RationalFunctions, CanonicalForm) {
  RationalFunctions<Rationals> k(Rationals{}, "u");
  auto a = parse_element(k, "(u^2-1)/(2*u+2)");
  EXPECT_EQ(k.to_string(a), "1/2*u-1/2");
  auto b = parse_element(k, "u/2 - 1/2");
  EXPECT_TRUE(k.eq(a, b));
  EXPECT_TRUE(k.is_one(k.mul(a, k.inv(a))));
  EXPECT_EQ(k.valuation_at_infinity(parse_element(k, "1/u^3")), 3);
}

TEST(RationalFunctions, RoundTripThroughText) {
  GaloisField gf(2, 2);
  RationalFunctions<GaloisField> k(gf, "u");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto a = k.random(rng, 4);
    EXPECT_TRUE(k.eq(parse_element(k, k.to_string(a)), a)) << k.to_string(a);
  }
  RationalFunctions<Rationals> kq(Rationals{}, "u");
  for (int i = 0; i < 200; ++i) {
    auto a = kq.random(rng, 4);
    EXPECT_TRUE(kq.eq(parse_element(kq, kq.to_string(a)), a)) << kq.to_string(a);
  }
}

TEST(Parse, Errors) {
  Rationals q;
  EXPECT_THROW(parse_element(q, "1/0"), Error);
  EXPECT_THROW(parse_element(q, "u"), Error);
  EXPECT_THROW(parse_element(q, "(1"), Error);
  EXPECT_EQ(parse_element(q, "-3/6"), mpq_class(-1, 2));
  GaloisField f(2, 3);
  EXPECT_EQ(parse_element(f, "a^7"), 1u);
}

TEST(IntegerFactor, Basic) {
  auto fs = factor_integer(mpz_class(2 * 2 * 3 * 7 * 7 * 101));
  ASSERT_EQ(fs.size(), 4u);
  EXPECT_EQ(fs[0].first, 2);
  EXPECT_EQ(fs[0].second, 2u);
  EXPECT_EQ(fs[3].first, 101);
  auto big = factor_integer(mpz_class("1000000007") * mpz_class("998244353"));
  ASSERT_EQ(big.size(), 2u);
  EXPECT_EQ(padic_valuation(mpq_class(12, 49), 7), -2);
}
