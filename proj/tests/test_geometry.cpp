#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "hypmet/point.hpp"

using namespace hypmet;

TEST(Point, BasicArithmetic) {
  const Point a{1.0, 2.0}, b{3.0, -1.0};
  EXPECT_EQ(a + b, (Point{4.0, 1.0}));
  EXPECT_EQ(a - b, (Point{-2.0, 3.0}));
  EXPECT_EQ(2.0 * a, (Point{2.0, 4.0}));
  EXPECT_EQ(-a, (Point{-1.0, -2.0}));
  EXPECT_DOUBLE_EQ(a.dot(b), 1.0);
  EXPECT_DOUBLE_EQ((Point{3.0, 4.0}).norm(), 5.0);
  EXPECT_DOUBLE_EQ((Point{3.0, 4.0}).height(), 4.0);
}

TEST(Point, RejectsBadInput) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW((Point{1.0}), Error);
  EXPECT_THROW((Point{1.0, nan}), Error);
  EXPECT_THROW(Point::zero(1), Error);
  EXPECT_THROW(Point::unit(2, 2), Error);
  try {
    require_same_dim(Point{0.0, 0.0}, Point{0.0, 0.0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Point, UnitVectors) {
  EXPECT_EQ(Point::unit(3, 2), (Point{0.0, 0.0, 1.0}));
  EXPECT_EQ(Point::zero(3), (Point{0.0, 0.0, 0.0}));
}

TEST(Point, LexOrderWithTolerance) {
  EXPECT_TRUE(lex_less(Point{0.0, -1.0}, Point{0.0, 1.0}));
  EXPECT_FALSE(lex_less(Point{0.0, 1.0}, Point{0.0, -1.0}));
  EXPECT_FALSE(lex_less(Point{1e-12, 0.0}, Point{0.0, 0.0}));
  EXPECT_FALSE(lex_less(Point{0.0, 0.0}, Point{1e-12, 0.0}));
  EXPECT_TRUE(lex_less(Point{0.0, 0.0}, Point{1e-12, 0.0}, 0.0));
}

TEST(ExtendedPoint, Infinity) {
  const auto inf = ExtendedPoint::infinity();
  EXPECT_TRUE(inf.is_infinite());
  EXPECT_THROW(inf.finite(), Error);
  EXPECT_EQ(inf, ExtendedPoint::infinity());
  EXPECT_FALSE(inf == ExtendedPoint(Point{0.0, 0.0}));
  EXPECT_EQ(inf.str(), "inf");
}

TEST(Chordal, KnownValues) {
  const Point o{0.0, 0.0}, e1{1.0, 0.0}, m1{-1.0, 0.0};
  EXPECT_DOUBLE_EQ(chordal_dist(o, ExtendedPoint::infinity()), 1.0);
  EXPECT_DOUBLE_EQ(chordal_dist(e1, m1), 1.0);
  EXPECT_DOUBLE_EQ(chordal_dist(e1, ExtendedPoint::infinity()), 1.0 / std::sqrt(2.0));
  EXPECT_EQ(chordal_dist(ExtendedPoint::infinity(), ExtendedPoint::infinity()), 0.0);
  EXPECT_LE(chordal_dist(Point{1e300, 0.0}, Point{-1e300, 0.0}), 1.0);
}

TEST(AbsoluteRatio, FiniteAndInfinite) {
  const Point a{0.0, 0.0}, b{1.0, 0.0}, c{3.0, 0.0}, d{0.0, 2.0};
  const double expect = euclid_dist(a, c) * euclid_dist(b, d) / (euclid_dist(a, b) * euclid_dist(c, d));
  EXPECT_NEAR(absolute_ratio(a, b, c, d), expect, 1e-15 * expect);
  // With a = ∞ the ratio reduces to |b-d| / |c-d|.
  EXPECT_NEAR(absolute_ratio(ExtendedPoint::infinity(), b, c, d), euclid_dist(b, d) / euclid_dist(c, d), 1e-15);
  EXPECT_THROW(absolute_ratio(a, a, c, d), Error);
}

TEST(AbsoluteRatio, ChordalAgreesWithEuclidean) {
  const Point a{0.3, -1.0}, b{2.0, 0.5}, c{-1.5, 0.25}, d{0.0, 4.0};
  const double q = chordal_dist(a, c) * chordal_dist(b, d) / (chordal_dist(a, b) * chordal_dist(c, d));
  EXPECT_NEAR(absolute_ratio(a, b, c, d), q, 1e-13 * q);
}
