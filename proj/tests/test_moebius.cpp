#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypmet/moebius.hpp"
#include "hypmet/sampling.hpp"

using namespace hypmet;

namespace {

void expect_near(const ExtendedPoint& a, const ExtendedPoint& b, double tol) {
  ASSERT_EQ(a.is_infinite(), b.is_infinite());
  if (a.is_infinite()) return;
  EXPECT_LE(euclid_dist(a.finite(), b.finite()), tol) << a.str() << " vs " << b.str();
}

}  // namespace

TEST(Moebius, Primitives) {
  const Point x{2.0, 0.0};
  EXPECT_EQ(MoebiusMap::invert(2)(x).finite(), (Point{0.5, 0.0}));
  EXPECT_TRUE(MoebiusMap::invert(2)(Point{0.0, 0.0}).is_infinite());
  EXPECT_EQ(MoebiusMap::invert(2).apply(ExtendedPoint::infinity()).finite(), (Point{0.0, 0.0}));
  EXPECT_EQ(MoebiusMap::translate(Point{1.0, -1.0})(x).finite(), (Point{3.0, -1.0}));
  EXPECT_EQ(MoebiusMap::scale(2, 3.0)(x).finite(), (Point{6.0, 0.0}));
  const auto rot = MoebiusMap::orthogonal(2, {0.0, -1.0, 1.0, 0.0});
  expect_near(rot(x), Point{0.0, 2.0}, 1e-15);
  EXPECT_TRUE(MoebiusMap::translate(Point{1.0, 1.0}).apply(ExtendedPoint::infinity()).is_infinite());
}

TEST(Moebius, RejectsInvalidPrimitives) {
  EXPECT_THROW(MoebiusMap::scale(2, 0.0), Error);
  EXPECT_THROW(MoebiusMap::orthogonal(2, {1.0, 1.0, 0.0, 1.0}), Error);
  EXPECT_THROW(MoebiusMap::orthogonal(2, {1.0, 0.0, 0.0}), Error);
  EXPECT_THROW(MoebiusMap::invert(2)(Point{1.0, 0.0, 0.0}), Error);
  EXPECT_THROW(MoebiusMap::invert(2).then(MoebiusMap::invert(3)), Error);
}

TEST(Moebius, CompositionOrder) {
  const auto t = MoebiusMap::translate(Point{1.0, 0.0});
  const auto s = MoebiusMap::scale(2, 2.0);
  const Point x{1.0, 1.0};
  // compose(f, g) applies g first.
  EXPECT_EQ(compose(s, t)(x).finite(), (Point{4.0, 2.0}));
  EXPECT_EQ(t.then(s)(x).finite(), (Point{4.0, 2.0}));
  EXPECT_EQ(compose(t, s)(x).finite(), (Point{3.0, 2.0}));
}

TEST(Moebius, InverseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + k % 2;
    const auto f = random_moebius(rng, n);
    Point x = Point::zero(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = uniform(rng, -2.0, 2.0);
    const auto fx = f(x);
    if (fx.is_infinite()) continue;
    const auto back = f.inverse().apply(fx);
    ASSERT_TRUE(back.is_finite());
    EXPECT_LE(euclid_dist(back.finite(), x), 1e-9 * (1.0 + x.norm()));
  }
}

TEST(Moebius, PoleGoesToInfinity) {
  const auto f = MoebiusMap::translate(Point{-1.0, 2.0}).then(MoebiusMap::invert(2));
  expect_near(f.pole(), Point{1.0, -2.0}, 1e-15);
  EXPECT_TRUE(f.apply(f.pole()).is_infinite());
  EXPECT_TRUE(f.has_inversion());
  EXPECT_FALSE(MoebiusMap::scale(2, 2.0).has_inversion());
}

TEST(Moebius, CanonicalHalfPlaneToDisk) {
  const auto f = canonical_h2b(2);
  expect_near(f(Point{0.0, 1.0}), Point{0.0, 0.0}, 1e-15);
  expect_near(f(Point{0.0, 0.0}), Point{0.0, 1.0}, 1e-15);
  expect_near(f.apply(ExtendedPoint::infinity()), Point{0.0, -1.0}, 1e-15);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const double t = uniform(rng, -50.0, 50.0);
    EXPECT_NEAR(f(Point{t, 0.0}).finite().norm(), 1.0, 1e-12);
    const Point z = sample_halfspace(rng, 2);
    EXPECT_LT(f(z).finite().norm(), 1.0);
  }
}

TEST(Moebius, CanonicalHalfSpaceToBall3) {
  const auto f = canonical_h2b(3);
  expect_near(f(Point{0.0, 0.0, 1.0}), Point{0.0, 0.0, 0.0}, 1e-15);
  EXPECT_NEAR(f(Point{2.0, -3.0, 0.0}).finite().norm(), 1.0, 1e-14);
}

TEST(Moebius, BallAutomorphism) {
  const Point a{0.3, -0.4};
  const auto f = ball_automorphism(a);
  expect_near(f(a), Point{0.0, 0.0}, 1e-15);
  for (int k = 0; k < 16; ++k) {
    const double th = 0.4 * k;
    EXPECT_NEAR(f(Point{std::cos(th), std::sin(th)}).finite().norm(), 1.0, 1e-14);
  }
  EXPECT_THROW(ball_automorphism(Point{1.0, 0.0}), Error);
}

TEST(Moebius, JsonRoundTrip) {
  std::mt19937_64 rng(11);
  const auto f = random_moebius(rng, 3);
  const auto g = MoebiusMap::from_json(f.to_json(), 3);
  const Point x{0.1, -0.7, 2.0};
  expect_near(f(x), g(x), 1e-15);
  EXPECT_EQ(f.to_json(), g.to_json());
}

TEST(Moebius, JsonErrors) {
  auto code = [](const std::string& text) {
    try {
      MoebiusMap::from_json(text, 2);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code("not json"), ErrorCode::Parse);
  EXPECT_EQ(code(R"([{"op":"shear"}])"), ErrorCode::Parse);
  EXPECT_EQ(code(R"({"op":"invert"})"), ErrorCode::Parse);
  EXPECT_EQ(code(R"([{"op":"translate","v":[1,2,3]}])"), ErrorCode::DimensionMismatch);
  EXPECT_NO_THROW(MoebiusMap::from_json(R"({"chain":[{"op":"invert"},{"op":"scale","factor":2}]})", 2));
}

TEST(Moebius, ConformalInvarianceOfAbsoluteRatio) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    const auto f = random_moebius(rng, 2);
    std::vector<ExtendedPoint> q;
    for (int i = 0; i < 4; ++i) q.push_back(Point{uniform(rng, -3.0, 3.0), uniform(rng, -3.0, 3.0)});
    if (k % 3 == 0) q[k % 4] = ExtendedPoint::infinity();
    const double r0 = absolute_ratio(q[0], q[1], q[2], q[3]);
    const double r1 = absolute_ratio(f.apply(q[0]), f.apply(q[1]), f.apply(q[2]), f.apply(q[3]));
    EXPECT_NEAR(r1, r0, 1e-9 * r0);
  }
}
