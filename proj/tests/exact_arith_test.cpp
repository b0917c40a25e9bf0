#include "riley/exact_arith.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

namespace riley {
namespace {

TEST(IntPolyTest, NormalizesTrailingZeros) {
  EXPECT_EQ(IntPoly({1, 2, 0, 0}).coeffs().size(), 2u);
  EXPECT_TRUE(IntPoly({0, 0}).is_zero());
  EXPECT_TRUE(IntPoly().degree().is_minus_infinity());
  EXPECT_EQ(IntPoly({5}).degree(), Degree(0));
  EXPECT_LT(IntPoly().degree(), Degree(0));
  EXPECT_THROW(IntPoly().degree().value(), std::logic_error);
}

TEST(IntPolyTest, Add) {
  EXPECT_EQ(IntPoly({1, 1}) + IntPoly({1, -1}), IntPoly({2}));
  const IntPoly f{3, 0, -7};
  EXPECT_EQ(f + IntPoly(), f);
  EXPECT_EQ(IntPoly({1, -2, 1, -1}) + IntPoly({0, 0, 0, 1}), IntPoly({1, -2, 1}));
  EXPECT_TRUE((f - f).is_zero());
}

TEST(IntPolyTest, Multiply) {
  EXPECT_EQ(IntPoly({1, -1}) * IntPoly({1, 1}), IntPoly({1, 0, -1}));
  const IntPoly f{4, -1, 9};
  EXPECT_EQ(f * IntPoly({1}), f);
  EXPECT_EQ(IntPoly({1, -1}) * IntPoly({1, 1, 1}), IntPoly({1, 0, 0, -1}));
  EXPECT_TRUE((f * IntPoly()).is_zero());
}

TEST(IntPolyTest, EvalInteger) {
  EXPECT_EQ(eval(IntPoly({1, -2, 1, -1}), Integer(1)), -1);
  EXPECT_EQ(eval(IntPoly({42, 5, 6}), Integer(0)), 42);
  EXPECT_EQ(eval(IntPoly({1, -1}), Integer(1)), 0);
  EXPECT_EQ(eval(IntPoly(), Integer(7)), 0);
}

TEST(IntPolyTest, EvalComplex) {
  const Complex w(-0.5, std::sqrt(3.0) / 2.0);
  EXPECT_LT(std::abs(eval(IntPoly({1, 1, 1}), w)), 1e-12);
  EXPECT_EQ(eval(IntPoly({-3, 8}), Complex(0.0, 0.0)), Complex(-3.0, 0.0));
  EXPECT_EQ(eval(IntPoly({1, -1}), Complex(2.0, 0.0)), Complex(-1.0, 0.0));
}

TEST(IntPolyTest, CoefficientsDoNotOverflow) {
  IntPoly f{1, 1};
  for (int i = 0; i < 7; ++i) f = f * f;  // (1+u)^128
  // binomial(128, 64), from Python's math.comb
  EXPECT_EQ(f.coeffs()[64], Integer("23951146041928082866135587776380551750"));
}

TEST(PolyDividesTest, ExactQuotient) {
  const auto d = poly_divides(IntPoly({1, -1}), IntPoly({1, 0, -1}));
  ASSERT_TRUE(d.divides);
  ASSERT_TRUE(d.quotient.has_value());
  EXPECT_EQ(*d.quotient, IntPoly({1, 1}));
}

TEST(PolyDividesTest, SelfDivision) {
  const IntPoly f{1, -2, 1, -1};
  const auto d = poly_divides(f, f);
  ASSERT_TRUE(d.divides);
  EXPECT_EQ(*d.quotient, IntPoly({1}));
}

TEST(PolyDividesTest, NotDivisible) {
  // 1 - u cannot divide a polynomial that is -1 at u = 1.
  ASSERT_EQ(eval(IntPoly({1, -2, 1, -1}), Integer(1)), -1);
  EXPECT_FALSE(poly_divides(IntPoly({1, -1}), IntPoly({1, -2, 1, -1})).divides);
  EXPECT_FALSE(poly_divides(IntPoly({1, 0, 1}), IntPoly({1, 1})).divides);
}

TEST(PolyDividesTest, RationalQuotientIsFlagged) {
  // 2u + 2 divides u + 1 over Q with quotient 1/2.
  const auto d = poly_divides(IntPoly({2, 2}), IntPoly({1, 1}));
  ASSERT_TRUE(d.divides);
  EXPECT_FALSE(d.quotient.has_value());
  ASSERT_TRUE(d.rational_quotient.has_value());
  EXPECT_EQ((*d.rational_quotient)[0], Rational(1, 2));
}

TEST(PolyDividesTest, ZeroDivisorThrows) {
  EXPECT_THROW(poly_divides(IntPoly(), IntPoly({1})), std::domain_error);
  EXPECT_TRUE(poly_divides(IntPoly({3, 1}), IntPoly()).divides);
}

TEST(IntPolyTest, Rendering) {
  EXPECT_EQ(to_string(IntPoly({1, -2, 1, -1})), "1 - 2u + u^2 - u^3");
  EXPECT_EQ(to_string(IntPoly({1, -2, -3, -1})), "1 - 2u - 3u^2 - u^3");
  EXPECT_EQ(to_string(IntPoly({0, -1})), "-u");
  EXPECT_EQ(to_string(IntPoly({0, 0, 5})), "5u^2");
  EXPECT_EQ(to_string(IntPoly()), "0");
}

TEST(IntPolyTest, DerivativeAndContent) {
  EXPECT_EQ(derivative(IntPoly({1, -2, 1, -1})), IntPoly({-2, 2, -3}));
  EXPECT_TRUE(derivative(IntPoly({7})).is_zero());
  EXPECT_EQ(content(IntPoly({4, -6, 10})), 2);
}

// Ring axioms and the evaluation homomorphism on random inputs.
TEST(IntPolyProperty, RingAxioms) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_poly(rng, 12, 1'000'000);
    const auto g = oracle::random_poly(rng, 12, 1'000'000);
    const auto h = oracle::random_poly(rng, 12, 1'000'000);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, oracle::sparse_product(f, g));
  }
}

TEST(IntPolyProperty, EvaluationIsMultiplicative) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long long> point(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_poly(rng, 12, 1'000'000);
    const auto g = oracle::random_poly(rng, 12, 1'000'000);
    const Integer a = point(rng);
    EXPECT_EQ(eval(f * g, a), eval(f, a) * eval(g, a));
  }
}

TEST(IntPolyProperty, DegreeIsAdditive) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_poly(rng, 12, 1000);
    const auto g = oracle::random_poly(rng, 12, 1000);
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_EQ((f * g).degree().value(), f.degree().value() + g.degree().value());
  }
}

TEST(PolyDividesProperty, ProductsAreDivisible) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_poly(rng, 8, 1000);
    const auto q = oracle::random_poly(rng, 8, 1000);
    if (f.is_zero()) continue;
    const auto d = poly_divides(f, f * q);
    ASSERT_TRUE(d.divides);
    for (std::size_t k = 0; k < d.rational_quotient->size(); ++k) EXPECT_EQ((*d.rational_quotient)[k], Rational(q.coeff(k)));
    // f*q + 1 is not divisible unless f is a constant.
    if (f.degree() > Degree(0)) EXPECT_FALSE(poly_divides(f, f * q + IntPoly({1})).divides);
  }
}

TEST(PolyDividesProperty, MutualDivisibilityMeansRationalMultiple) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> scale(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = oracle::random_poly(rng, 8, 1000);
    long long c = scale(rng);
    if (f.is_zero() || c == 0) continue;
    const auto g = f * IntPoly({c});
    const auto fg = poly_divides(f, g);
    const auto gf = poly_divides(g, f);
    ASSERT_TRUE(fg.divides && gf.divides);
    EXPECT_EQ(fg.rational_quotient->size(), 1u);
    EXPECT_EQ((*fg.rational_quotient)[0] * (*gf.rational_quotient)[0], Rational(1));
  }
}

}  // namespace
}  // namespace riley
