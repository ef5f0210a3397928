#include "hstar/polynomial.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hstar;
using namespace hstar::testing;

TEST(Monomials, DescendingLexOrder) {
  const auto m = monomials(3, 2);
  ASSERT_EQ(m.size(), 6U);
  EXPECT_EQ(m.front(), (Exponent{2, 0, 0}));
  EXPECT_EQ(m[1], (Exponent{1, 1, 0}));
  EXPECT_EQ(m.back(), (Exponent{0, 0, 2}));
  EXPECT_EQ(monomials(3, 3).size(), 10U);
  EXPECT_EQ(monomials(4, 0).size(), 1U);
}

TEST(Multinomial, Values) {
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(multinomial({1, 1, 1}), 6);
  EXPECT_EQ(multinomial({2, 0, 1}), 3);
}

TEST(HomogeneousForm, ParseQuadric) {
  const auto f = HomogeneousForm::parse("1/5*x0^2 + x0*x1 + 3*x1^2 + 7/9*x0*x2 + 5/4*x1*x2 + 5/4*x2^2");
  EXPECT_EQ(f.nvars(), 3U);
  EXPECT_EQ(f.degree(), 2U);
  EXPECT_EQ(f.ring(), Ring::S);
  EXPECT_EQ(f.coefficient({1, 0, 1}), Scalar(Rational(7, 9)));
  EXPECT_EQ(f.coefficient({0, 2, 0}), Scalar(3));
  EXPECT_EQ(f.str(), "1/5*x0^2 + x0*x1 + 7/9*x0*x2 + 3*x1^2 + 5/4*x1*x2 + 5/4*x2^2");
}

TEST(HomogeneousForm, ParseVariants) {
  EXPECT_EQ(HomogeneousForm::parse("x0*x1*x2"), HomogeneousForm::monomial({1, 1, 1}));
  EXPECT_EQ(HomogeneousForm::parse("-x0^2 - 2*x0*x1").coefficient({2, 0}), Scalar(-1));
  EXPECT_EQ(HomogeneousForm::parse("x0*x0").coefficient({2}), Scalar(1));
  EXPECT_EQ(HomogeneousForm::parse("y0^2 + y1^2").ring(), Ring::T);
  EXPECT_EQ(HomogeneousForm::parse("x0*x1", 3).nvars(), 3U);
  const auto s = HomogeneousForm::parse("(1 + sqrt(2))*x0 - sqrt(2)*x1");
  EXPECT_EQ(s.coefficient({1, 0}), Scalar(1) + Scalar::sqrt_of(2));
  EXPECT_EQ(s.coefficient({0, 1}), -Scalar::sqrt_of(2));
  EXPECT_EQ(HomogeneousForm::parse("x0 - x0", 2).is_zero(), true);
}

TEST(HomogeneousForm, ParseErrors) {
  for (const char* bad : {"x0^2 + x1", "x0 + y1", "x0^", "2*", "x0 +", "x0 ++ x1", "x0.5", "z0", "x0*x5"})
    EXPECT_ANY_THROW(HomogeneousForm::parse(bad, std::optional<std::size_t>(bad == std::string("x0*x5") ? 3 : 2)))
        << bad;
}

TEST(HomogeneousForm, TextRoundTrip) {
  Sampler rng(61);
  for (int i = 0; i < 200; ++i) {
    const std::size_t nvars = 2 + i % 3;
    const unsigned d = 1 + static_cast<unsigned>(i % 4);
    const auto f = random_form(rng, nvars, d, 20);
    EXPECT_EQ(HomogeneousForm::parse(f.str(), nvars), f);
  }
  const Scalar s = Scalar::sqrt_of(2641);
  HomogeneousForm q(3, 2);
  q.add_term({2, 0, 0}, Scalar(Rational(-137, 144)) + Scalar(Rational(1, 144)) * s);
  q.add_term({0, 1, 1}, -s);
  EXPECT_EQ(HomogeneousForm::parse(q.str(), 3), q);
}

TEST(HomogeneousForm, LinearPowerExpandsMultinomially) {
  // (x0 + 2 x1)^3 = x0^3 + 6 x0^2 x1 + 12 x0 x1^2 + 8 x1^3
  const auto f = HomogeneousForm::linear_power({Scalar(1), Scalar(2)}, 3);
  EXPECT_EQ(f, HomogeneousForm::parse("x0^3 + 6*x0^2*x1 + 12*x0*x1^2 + 8*x1^3"));
}

TEST(HomogeneousForm, Arithmetic) {
  const auto a = HomogeneousForm::parse("x0^2 + x1^2");
  const auto b = HomogeneousForm::parse("x0^2 - x0*x1");
  EXPECT_EQ(a - b, HomogeneousForm::parse("x0*x1 + x1^2"));
  EXPECT_EQ(a + b, HomogeneousForm::parse("2*x0^2 - x0*x1 + x1^2"));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_ANY_THROW(a + HomogeneousForm::parse("x0^3"));
}

TEST(ParseLinearForm, BothNotations) {
  EXPECT_EQ(parse_linear_form("[13/4 : 1/2 : 1/3]"),
            LinearForm({Scalar(Rational(13, 4)), Scalar(Rational(1, 2)), Scalar(Rational(1, 3))}));
  const auto l = parse_linear_form("13/4*y0 + 1/2*y1 + 1/3*y2");
  EXPECT_EQ(l.ring(), Ring::T);
  EXPECT_EQ(l, parse_linear_form("[39 : 6 : 4]"));
  EXPECT_EQ(parse_linear_form("y0 + y1", 3).coeffs().size(), 3U);
  EXPECT_ANY_THROW(parse_linear_form("y0^2"));
  EXPECT_ANY_THROW(parse_linear_form("[1 : 2]", 3));
}
