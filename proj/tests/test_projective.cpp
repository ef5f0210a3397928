#include "hstar/projective.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hstar;
using namespace hstar::testing;

TEST(ProjPoint, RejectsZeroVectorAndTooFewCoordinates) {
  EXPECT_THROW(ProjPoint({Scalar(0), Scalar(0), Scalar(0)}), std::invalid_argument);
  EXPECT_ANY_THROW(ProjPoint({Scalar(1)}));
}

TEST(ProjPoint, EqualityIsUpToScale) {
  EXPECT_EQ(ProjPoint::parse("[1/2 : -3 : 7/5]"), (ProjPoint{5, -30, 14}));
  EXPECT_FALSE(ProjPoint::parse("[1 : 2 : 3]") == ProjPoint::parse("[1 : 2 : 4]"));
  EXPECT_FALSE(ProjPoint::parse("[0 : 1]") == ProjPoint::parse("[1 : 0]"));
  EXPECT_EQ(ProjPoint::parse("[2 : 4]").canonical().str(), "[1 : 2]");
  EXPECT_EQ(ProjPoint::parse("[0 : -3 : 6]").canonical().str(), "[0 : 1 : -2]");
}

TEST(ProjPoint, ParseRoundTrip) {
  Sampler rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_point(rng, 1 + i % 4, 50, 9);
    EXPECT_EQ(ProjPoint::parse(p.str()).coords(), p.coords());
  }
  const auto s = ProjPoint::parse("[1 : -137/144 + 1/144*sqrt(2641) : 2]");
  EXPECT_EQ(s[1].radicand(), 2641);
  EXPECT_EQ(ProjPoint::parse(s.str()).coords(), s.coords());
  EXPECT_ANY_THROW(ProjPoint::parse("1 : 2"));
  EXPECT_ANY_THROW(ProjPoint::parse("[1 : x]"));
}

TEST(Hadamard, Examples) {
  EXPECT_EQ(hadamard(ProjPoint{1, 2, 3}, ProjPoint{4, 5, 6}), (ProjPoint{4, 10, 18}));
  EXPECT_EQ(hadamard(ProjPoint{1, 0, 3}, ProjPoint{0, 5, 6}), (ProjPoint{0, 0, 1}));
  EXPECT_THROW(hadamard(ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}), GeometryError);
  EXPECT_ANY_THROW(hadamard(ProjPoint{1, 1}, ProjPoint{1, 1, 1}));
}

TEST(Hadamard, PointTimesHyperplane) {
  // P * V(a) = V(a_0/p_0 x_0 + ...).
  const LinearForm h{1, 1, 1};
  const ProjPoint p{1, -2, 1};
  EXPECT_EQ(hadamard(p, h), (LinearForm{Scalar(1), Scalar(Rational(-1, 2)), Scalar(1)}));
  EXPECT_THROW(hadamard(ProjPoint{1, 0, 1}, h), GeometryError);
}

TEST(Hadamard, ImageOfHyperplaneContainsProducts) {
  // Q in V(h) => P * Q in P * V(h).
  Sampler rng(32);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 3;
    const LinearForm h = rng.full_support_form(n, 9);
    const ProjPoint p = random_nonzero_point(rng, n, 9);
    const ProjPoint q = rng.nonzero_point_on(h, 9);
    EXPECT_TRUE(hadamard(p, h).contains(hadamard(p, q)));
  }
}

TEST(Hadamard, MonoidLaws) {
  Sampler rng(33);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 4;
    const auto a = random_point(rng, n, 5);
    const auto b = random_point(rng, n, 5);
    const auto c = random_point(rng, n, 5);
    const auto one = ProjPoint::ones(n);
    EXPECT_EQ(hadamard(a, one), a);
    try {
      EXPECT_EQ(hadamard(a, b), hadamard(b, a));
      EXPECT_EQ(hadamard(hadamard(a, b), c), hadamard(a, hadamard(b, c)));
    } catch (const GeometryError&) {
      // Only allowed when some product has no nonzero coordinate.
      bool undefined = false;
      try {
        hadamard(hadamard(a, b), c);
        hadamard(a, hadamard(b, c));
      } catch (const GeometryError&) {
        undefined = true;
      }
      EXPECT_TRUE(undefined);
    }
  }
}

TEST(Cremona, Example) {
  EXPECT_EQ(cremona(ProjPoint{1, 2, 3, 14}), (ProjPoint{42, 21, 14, 3}));
  EXPECT_THROW(cremona(ProjPoint{1, 0, 3}), GeometryError);
}

TEST(Cremona, InvolutionAndMultiplicativity) {
  Sampler rng(34);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + i % 4;
    const auto a = random_nonzero_point(rng, n, 20, 7);
    const auto b = random_nonzero_point(rng, n, 20, 7);
    EXPECT_EQ(cremona(cremona(a)), a);
    EXPECT_EQ(cremona(hadamard(a, b)), hadamard(cremona(a), cremona(b)));
    EXPECT_EQ(hadamard(a, cremona(a)), ProjPoint::ones(n));
  }
}

TEST(DeltaStratum, CountsNonzeroCoordinates) {
  EXPECT_EQ(delta_stratum(ProjPoint{1, 0, 0}), 0U);
  EXPECT_EQ(delta_stratum(ProjPoint{1, 1, 0}), 1U);
  EXPECT_EQ(delta_stratum(ProjPoint{1, 1, 1}), std::nullopt);
  EXPECT_EQ(delta_stratum(ProjPoint{1, 0, 1, 0}), 1U);
}

TEST(LinearForm, SupportAndText) {
  const LinearForm l({Scalar(Rational(13, 4)), Scalar(0), Scalar(Rational(1, 3))}, Ring::T);
  EXPECT_EQ(l.support(), (std::vector<std::size_t>{0, 2}));
  EXPECT_FALSE(l.full_support());
  EXPECT_EQ(l.str(), "13/4*y0 + 1/3*y2");
  EXPECT_EQ(l.bracket_str(), "[13/4 : 0 : 1/3]");
  EXPECT_THROW(LinearForm({Scalar(0), Scalar(0)}), std::invalid_argument);
  EXPECT_EQ(l, LinearForm({Scalar(39), Scalar(0), Scalar(4)}, Ring::S));
}

TEST(GeneralPosition, Examples) {
  EXPECT_TRUE(general_position({ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{0, 0, 1}, ProjPoint{1, 1, 1}}));
  EXPECT_FALSE(general_position({ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}, ProjPoint{1, 1, 0}, ProjPoint{1, 1, 1}}));
  // Fewer than n+1 points: linear independence.
  EXPECT_TRUE(general_position({ProjPoint{1, 0, 0}, ProjPoint{0, 1, 0}}));
  EXPECT_FALSE(general_position({ProjPoint{1, 2, 3}, ProjPoint{2, 4, 6}}));
}

TEST(GeneralPosition, AgreesWithMinorOracle) {
  Sampler rng(35);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 3;
    const std::size_t r = n + 1 + i % 3;
    std::vector<ProjPoint> pts;
    for (std::size_t k = 0; k < r; ++k) pts.push_back(random_point(rng, n, 2));
    bool oracle = true;
    for (const auto& idx : subsets(r, n + 1)) {
      std::vector<std::vector<mpq_class>> m;
      for (auto k : idx) {
        std::vector<mpq_class> row;
        for (const auto& c : pts[k].coords()) row.push_back(c.as_rational().gmp());
        m.push_back(row);
      }
      oracle = oracle && leibniz_det(m) != 0;
    }
    EXPECT_EQ(general_position(pts), oracle);
  }
}

TEST(GeneralPosition, ScaleAndPermutationInvariant) {
  Sampler rng(36);
  for (int i = 0; i < 100; ++i) {
    std::vector<ProjPoint> pts;
    for (int k = 0; k < 5; ++k) pts.push_back(random_point(rng, 2, 2));
    const bool gp = general_position(pts);
    std::vector<ProjPoint> scaled;
    for (const auto& p : pts) {
      Coords c;
      const Scalar s = rng.nonzero_rational(9, 5);
      for (const auto& x : p.coords()) c.push_back(x * s);
      scaled.emplace_back(std::move(c));
    }
    std::reverse(scaled.begin(), scaled.end());
    EXPECT_EQ(general_position(scaled), gp);
  }
}
