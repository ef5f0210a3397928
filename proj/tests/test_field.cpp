#include "hstar/field.hpp"
#include "hstar/random.hpp"

#include <gtest/gtest.h>

#include <unordered_set>

using namespace hstar;

TEST(Rational, CanonicalForm) {
  const Rational a(6, -4);
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(Rational(8, 4).str(), "2");
  EXPECT_EQ(Rational(0, -5).str(), "0");
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), ArithmeticError); }

TEST(Rational, ParseAcceptsSignsAndFractions) {
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse(" 12345678901234567890123/3 ").numerator(), mpz_class("4115226300411522630041"));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "/", "1/", "/2", "1.5", "abc", "1/0", "--1", "1/-2"})
    EXPECT_ANY_THROW(Rational::parse(bad)) << bad;
}

TEST(Rational, InverseOfZeroThrows) { EXPECT_THROW(Rational(0).inverse(), ArithmeticError); }

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(Rational(9, 4).exact_sqrt(), Rational(3, 2));
  EXPECT_FALSE(Rational(2).exact_sqrt().has_value());
  EXPECT_FALSE(Rational(-4).exact_sqrt().has_value());
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  Sampler rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = rng.rational(1000, 97);
    const Rational b = rng.rational(1000, 97);
    const Rational c = rng.nonzero_rational(1000, 97);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a / c * c, a);
    EXPECT_EQ(c * c.inverse(), Rational(1));
    EXPECT_EQ(a - a, Rational(0));
    EXPECT_EQ(Rational::parse(a.str()), a);
    EXPECT_EQ(gcd(a.numerator(), a.denominator()), 1);
    EXPECT_GT(a.denominator(), 0);
  }
}

TEST(QuadExt, RejectsBadRadicand) {
  EXPECT_THROW(QuadExt(1, 1, 4), ArithmeticError);
  EXPECT_THROW(QuadExt(1, 1, 1), ArithmeticError);
  EXPECT_THROW(QuadExt(1, 1, 0), ArithmeticError);
  EXPECT_NO_THROW(QuadExt(1, 1, 2641));
}

TEST(QuadExt, SqrtSquared) {
  const Scalar s = Scalar::sqrt_of(2641);
  EXPECT_EQ(s * s, Scalar(2641));
  EXPECT_TRUE((s * s).is_rational());
}

TEST(QuadExt, ZeroSurdCollapsesToRational) {
  const Scalar x = Scalar(2) + Scalar::sqrt_of(2641) * Scalar(0);
  EXPECT_TRUE(x.is_rational());
  EXPECT_EQ(x.inverse(), Scalar(Rational(1, 2)));
}

TEST(QuadExt, MixedRadicandsThrow) {
  EXPECT_THROW(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), ArithmeticError);
  EXPECT_THROW(Scalar::sqrt_of(2) * Scalar::sqrt_of(3), ArithmeticError);
}

TEST(QuadExt, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar(0).inverse(), ArithmeticError);
  EXPECT_THROW(Scalar::sqrt_of(5) / Scalar(0), ArithmeticError);
}

TEST(QuadExt, NormInverseAndConjugateOnRandomValues) {
  Sampler rng(12);
  for (int i = 0; i < 500; ++i) {
    const long m = i % 2 == 0 ? 2641 : 5;
    const Scalar a = QuadExt(rng.rational(500, 50), rng.nonzero_rational(500, 50), m);
    const Scalar b = QuadExt(rng.rational(500, 50), rng.rational(500, 50), m);
    EXPECT_EQ(a * a.inverse(), Scalar(1));
    EXPECT_EQ(Scalar(a.norm()), a * a.conjugate());
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    EXPECT_EQ((a + b).conjugate(), a.conjugate() + b.conjugate());
    EXPECT_EQ(Scalar::parse(a.str()), a);
    EXPECT_EQ(Scalar::parse(b.str()), b);
    // sqrt(m) is irrational, so the norm of a nonzero element never vanishes.
    EXPECT_FALSE(a.norm().is_zero());
  }
}

TEST(QuadExt, ExactSqrtByNorm) {
  const Scalar s = Scalar::sqrt_of(2641);
  const Scalar x = Scalar(3) + Scalar(Rational(1, 2)) * s;
  const auto r = (x * x).exact_sqrt();
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, x * x);
  EXPECT_FALSE(s.exact_sqrt().has_value());
  const auto root2 = Scalar(8).exact_sqrt(2);
  ASSERT_TRUE(root2.has_value());
  EXPECT_EQ(*root2 * *root2, Scalar(8));
}

TEST(Scalar, ParseAndPrint) {
  const Scalar x = Scalar::parse("-137/144 + 1/144*sqrt(2641)");
  EXPECT_EQ(x.radicand(), 2641);
  EXPECT_EQ(x.rational_part(), Rational(-137, 144));
  EXPECT_EQ(x.surd_part(), Rational(1, 144));
  EXPECT_EQ(x.str(), "-137/144 + 1/144*sqrt(2641)");
  EXPECT_EQ(Scalar::parse("-sqrt(5)").str(), "-sqrt(5)");
  EXPECT_EQ(Scalar::parse("3/2").str(), "3/2");
  EXPECT_EQ(Scalar::parse("1 - 3*sqrt(5)"), Scalar(1) - Scalar(3) * Scalar::sqrt_of(5));
  EXPECT_ANY_THROW(Scalar::parse("sqrt(4)"));
  EXPECT_ANY_THROW(Scalar::parse("1 + "));
  EXPECT_ANY_THROW(Scalar::parse("sqrt(2) + sqrt(3)"));
}

TEST(Scalar, HashAgreesWithEquality) {
  std::unordered_set<Scalar> set;
  set.insert(Scalar(Rational(2, 4)));
  set.insert(Scalar(Rational(1, 2)));
  set.insert(Scalar(QuadExt(Rational(1, 2), 0, 7)));
  EXPECT_EQ(set.size(), 1U);
  set.insert(Scalar::sqrt_of(7));
  EXPECT_EQ(set.size(), 2U);
}
