#include <gtest/gtest.h>

#include <random>

#include "jmwg/polynomial.hpp"

namespace jmwg {
namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

TEST(IntPolynomial, CanonicalDegreeAndText) {
  const IntPolynomial p{0, -1, 0, 1, 0, 0};
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.to_string(), "d^3-d");
  EXPECT_EQ(IntPolynomial({-3, 0, 2}).to_string(), "2d^2-3");
  EXPECT_EQ(IntPolynomial({6, 0, -8, 0, 1}).to_string(), "d^4-8d^2+6");
  EXPECT_EQ(IntPolynomial({-1}).to_string(), "-1");
  EXPECT_EQ(IntPolynomial().to_string(), "0");
  EXPECT_EQ(IntPolynomial().degree(), -1);
  EXPECT_EQ(IntPolynomial({0, 0, -1}).to_string("x"), "-x^2");
}

TEST(IntPolynomial, ArithmeticAndEvaluation) {
  const IntPolynomial a{-1, 1};
  const IntPolynomial b{1, 1};
  EXPECT_EQ(a * b, IntPolynomial({-1, 0, 1}));
  EXPECT_EQ(a + b, IntPolynomial({0, 2}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a * b).evaluate(Integer(3)), 8);
  EXPECT_EQ((a * b).evaluate(Rational(1, 2)), Rational(-3, 4));
  EXPECT_EQ(IntPolynomial({4, 6, 2}).content(), 2);
  EXPECT_EQ(IntPolynomial({4, 6, 2}).primitive_part(), IntPolynomial({2, 3, 1}));
  EXPECT_THROW(IntPolynomial({3, 1}).divide_exact(2), std::domain_error);
}

TEST(IntPolynomial, ExactQuotient) {
  const IntPolynomial p = IntPolynomial{-1, 1} * IntPolynomial{-4, 0, 1};
  EXPECT_EQ(exact_quotient(p, IntPolynomial({-1, 1})), IntPolynomial({-4, 0, 1}));
  EXPECT_FALSE(exact_quotient(p, IntPolynomial({3, 1})).has_value());
  EXPECT_FALSE(exact_quotient(IntPolynomial({1, 2}), IntPolynomial({0, 2})).has_value());
}

TEST(IntPolynomial, PseudoRemainderIdentity) {
  // lc(b)^(deg a - deg b + 1) a = q b + prem, deg prem < deg b.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, 6);
    auto b = random_poly(rng, 3);
    if (b.degree() < 1) continue;
    const auto rem = pseudo_remainder(a, b);
    EXPECT_LT(rem.degree(), b.degree());
    if (a.degree() < b.degree()) continue;
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(a.degree() - b.degree() + 1));
    EXPECT_TRUE(exact_quotient(a * scale - rem, b).has_value());
  }
}

TEST(Gcd, KnownCases) {
  EXPECT_EQ(gcd(IntPolynomial({-1, 0, 1}), IntPolynomial({0, -1, 0, 1})), IntPolynomial({-1, 0, 1}));
  EXPECT_EQ(gcd(IntPolynomial({2, 4}), IntPolynomial({6, 12})), IntPolynomial({2, 4}));
  EXPECT_EQ(gcd(IntPolynomial({1, 1}), IntPolynomial({-1, 1})), IntPolynomial({1}));
  EXPECT_EQ(gcd(IntPolynomial(), IntPolynomial({3, -1})), IntPolynomial({-3, 1}));
}

TEST(Gcd, RecoversPlantedCommonFactor) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly(rng, 4);
    const auto b = random_poly(rng, 4);
    const auto c = random_poly(rng, 3);
    const auto g = gcd(a * c, b * c);
    EXPECT_TRUE(exact_quotient(a * c, g).has_value());
    EXPECT_TRUE(exact_quotient(b * c, g).has_value());
    // c (up to sign and content) divides the gcd.
    EXPECT_TRUE(exact_quotient(g, c.primitive_part()).has_value());
    EXPECT_GT(g.leading(), 0);
  }
}

TEST(RationalFunction, CanonicalForm) {
  const RationalFunction r(IntPolynomial({2}), IntPolynomial({0, 2}));
  EXPECT_EQ(r.numerator(), IntPolynomial({1}));
  EXPECT_EQ(r.denominator(), IntPolynomial({0, 1}));
  const RationalFunction s(IntPolynomial({-1, 1}), IntPolynomial({1, 0, -1}));
  EXPECT_EQ(s.numerator(), IntPolynomial({-1}));
  EXPECT_EQ(s.denominator(), IntPolynomial({1, 1}));
  const RationalFunction zero(IntPolynomial(), IntPolynomial({5, 1}));
  EXPECT_EQ(zero.denominator(), IntPolynomial({1}));
  EXPECT_THROW(RationalFunction(IntPolynomial({1}), IntPolynomial()), std::domain_error);
}

TEST(RationalFunction, FieldOperationsAgreeWithEvaluation) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    auto den_a = random_poly(rng, 3);
    auto den_b = random_poly(rng, 3);
    const RationalFunction a(random_poly(rng, 3), den_a);
    const RationalFunction b(random_poly(rng, 3), den_b);
    const Rational x(97, 13);
    if (a.denominator().evaluate(x) == 0 || b.denominator().evaluate(x) == 0) continue;
    EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
    EXPECT_EQ((a - b).evaluate(x), a.evaluate(x) - b.evaluate(x));
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
    if (!b.is_zero() && b.evaluate(x) != 0) EXPECT_EQ((a / b).evaluate(x), a.evaluate(x) / b.evaluate(x));
  }
}

TEST(RationalFunction, PoleIsReported) {
  const RationalFunction r(IntPolynomial({1}), IntPolynomial({-1, 0, 1}));
  EXPECT_THROW(r.evaluate(Rational(1)), PoleError);
  EXPECT_EQ(r.evaluate(Rational(2)), Rational(1, 3));
}

TEST(RationalFunction, SeriesAtInfinity) {
  const RationalFunction r(IntPolynomial({1}), IntPolynomial({-1, 0, 1}));
  const auto s = r.series_at_infinity(2, 6);
  const std::vector<Rational> expected{1, 0, 1, 0, 1, 0};
  EXPECT_EQ(s, expected);
  const auto shifted = r.series_at_infinity(0, 4);
  EXPECT_EQ(shifted, (std::vector<Rational>{0, 0, 1, 0}));
  EXPECT_THROW(r.series_at_infinity(3, 2), std::domain_error);
}

TEST(RationalFunction, TextForms) {
  const RationalFunction wg2(IntPolynomial({-1}), IntPolynomial({0, -1, 0, 1}));
  EXPECT_EQ(wg2.to_string(), "-1/(d^3-d)");
  EXPECT_EQ(wg2.to_factored_string(), "-1/(d(d^2-1))");
  const RationalFunction wg21(IntPolynomial({-1}), IntPolynomial{-1, 0, 1} * IntPolynomial{-4, 0, 1});
  EXPECT_EQ(wg21.to_factored_string(), "-1/((d^2-1)(d^2-4))");
  EXPECT_EQ(wg21.to_string(), "-1/(d^4-5d^2+4)");
  const RationalFunction inv(IntPolynomial({1}), IntPolynomial({0, 1}));
  EXPECT_EQ(inv.to_string(), "1/d");
  EXPECT_EQ(inv.to_factored_string(), "1/d");
  const RationalFunction poly(IntPolynomial({-2, 0, 1}));
  EXPECT_EQ(poly.to_string(), "d^2-2");
  const RationalFunction mixed(IntPolynomial({-2, 0, 1}), IntPolynomial{0, 1} * IntPolynomial{3, 1});
  EXPECT_EQ(mixed.to_string(), "(d^2-2)/(d^2+3d)");
  EXPECT_EQ(mixed.to_factored_string(), "(d^2-2)/(d(d+3))");
}

}  // namespace
}  // namespace jmwg
