#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypmet/sampling.hpp"
#include "hypmet/solver.hpp"

using namespace hypmet;

// Reference minima computed by a dense independent sweep (2e6 samples plus
// bounded scalar refinement).
TEST(Solver, CircleReferenceValues) {
  struct Case {
    Point x, y;
    double value;
  };
  const Case cases[] = {
      {{0.0, 0.0}, {0.5, 0.0}, 0.5},
      {{0.0, 0.5}, {0.0, -0.5}, 0.75},
      {{0.5, 0.3}, {0.5, -0.3}, 0.339567198582},
      {{0.8, 0.1}, {0.8, -0.1}, 0.05},
      {{0.25, 0.0}, {0.5, 0.0}, 0.375},
      {{-0.25, 0.0}, {0.5, 0.0}, 0.625},
      {{0.3, 0.4}, {0.5, 0.0}, 0.355572809000},
  };
  for (const auto& c : cases) {
    const auto e = min_product_circle(c.x, c.y);
    EXPECT_NEAR(e.value, c.value, 1e-11) << c.x << " " << c.y;
    EXPECT_NEAR(e.argmin.norm(), 1.0, 1e-14);
    EXPECT_NEAR(euclid_dist(e.argmin, c.x) * euclid_dist(e.argmin, c.y), e.value, 1e-14);
  }
}

TEST(Solver, CircleArgminTieBreak) {
  const auto e = min_product_circle(Point{0.5, 0.3}, Point{0.5, -0.3});
  EXPECT_NEAR(e.argmin[0], 0.98529411759, 1e-9);
  EXPECT_NEAR(e.argmin[1], -0.17086691268, 1e-9);
  const auto g = min_product_circle(Point{0.3, 0.4}, Point{0.5, 0.0});
  EXPECT_NEAR(g.argmin[0], 2.0 / std::sqrt(5.0), 1e-9);
  EXPECT_NEAR(g.argmin[1], 1.0 / std::sqrt(5.0), 1e-9);
}

TEST(Solver, LineReferenceValues) {
  auto e = min_product_line(Point{0.0, 2.0}, Point{0.0, 0.5});
  EXPECT_NEAR(e.value, 1.0, 1e-14);
  EXPECT_NEAR(e.argmin[0], 0.0, 1e-12);
  e = min_product_line(Point{3.0, 1.0}, Point{-3.0, 1.0});
  EXPECT_NEAR(e.value, 6.0, 1e-13);
  EXPECT_NEAR(e.argmin[0], -std::sqrt(8.0), 1e-12);
  e = min_product_line(Point{0.5, 1.0}, Point{-0.5, 1.0});
  EXPECT_NEAR(e.value, 1.25, 1e-14);
  EXPECT_NEAR(e.argmin[0], 0.0, 1e-12);
  e = min_product_line(Point{0.3, 2.0}, Point{-1.0, 0.1});
  EXPECT_NEAR(e.argmin[0], -0.997716, 1e-6);
  EXPECT_EQ(e.argmin[1], 0.0);
}

TEST(Solver, LineAgreesWithOracle) {
  std::mt19937_64 rng(23);
  const auto h = Domain::halfspace(2);
  for (int k = 0; k < 40; ++k) {
    const Point x = sample_halfspace(rng, 2), y = sample_halfspace(rng, 2);
    const double a = min_product_line(x, y).value;
    const double b = oracle_min_product(h, x, y, 200000).value;
    EXPECT_NEAR(a, b, 1e-9 * b) << x << " " << y;
  }
}

TEST(Solver, CircleAgreesWithOracle) {
  std::mt19937_64 rng(29);
  const auto d = Domain::ball(2);
  for (int k = 0; k < 40; ++k) {
    const Point x = sample_ball(rng, 2), y = sample_ball(rng, 2);
    const double a = min_product_circle(x, y).value;
    const double b = oracle_min_product(d, x, y, 200000).value;
    EXPECT_NEAR(a, b, 1e-9 * b) << x << " " << y;
  }
}

TEST(Solver, Segment) {
  auto e = min_product_segment(Point{0.0, 1.0}, Point{0.0, 1.0}, Point{-1.0, 0.0}, Point{1.0, 0.0});
  EXPECT_NEAR(e.value, 1.0, 1e-15);
  EXPECT_NEAR(e.argmin[0], 0.0, 1e-7);
  // Minimum at an endpoint.
  e = min_product_segment(Point{5.0, 1.0}, Point{6.0, 1.0}, Point{-1.0, 0.0}, Point{1.0, 0.0});
  EXPECT_EQ(e.argmin, (Point{1.0, 0.0}));
  EXPECT_NEAR(e.value, std::hypot(4.0, 1.0) * std::hypot(5.0, 1.0), 1e-12);
}

TEST(Solver, SphereReductionMatchesOracle) {
  const Point x{0.1, 0.5, -0.3}, y{-0.4, 0.2, 0.6};
  const double a = min_product_sphere(x, y).value;
  const double b = oracle_min_product(Domain::ball(3), x, y, 1'000'000).value;
  EXPECT_NEAR(a, b, 1e-10);
  const Point u{0.1, 0.5, 0.3}, v{-0.4, 0.2, 0.06};
  const auto h = min_product_hyperplane(u, v);
  EXPECT_EQ(h.argmin[2], 0.0);
  EXPECT_NEAR(h.value, oracle_min_product(Domain::halfspace(3), u, v, 1'000'000).value, 1e-9);
}

TEST(Solver, PlaneFrames) {
  const Point x{0.1, 0.5, -0.3}, y{-0.4, 0.2, 0.6};
  const auto f = ball_frame(x, y);
  EXPECT_NEAR(f.u.norm(), 1.0, 1e-15);
  EXPECT_NEAR(f.u.dot(f.v), 0.0, 1e-15);
  EXPECT_LE(euclid_dist(f.from_plane(f.to_plane(x)), x), 1e-15);
  EXPECT_LE(euclid_dist(f.from_plane(f.to_plane(y)), y), 1e-15);
  const auto g = halfspace_frame(Point{1.0, 2.0, 0.5}, Point{3.0, -1.0, 2.0});
  EXPECT_EQ(g.v, (Point{0.0, 0.0, 1.0}));
  EXPECT_NEAR(g.to_plane(Point{1.0, 2.0, 0.5})[1], 0.5, 1e-15);
}

TEST(Solver, ParamOnPolygonMatchesSegments) {
  const auto sq = Domain::polygon({{0.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {0.0, 1.0}});
  const Point x{0.5, 0.5}, y{1.5, 0.3};
  const auto a = min_product_param(boundary_param(sq), x, y, 4096);
  const auto b = boundary_inf_product(sq, x, y);
  EXPECT_NEAR(a.value, b.value, 1e-12);
}

TEST(Solver, CloudInfimumAttained) {
  // On a cloud the infimum is always attained at a sample.
  const auto c = Domain::cloud({{2.0, 0.0}, {0.0, 3.0}});
  const auto e = boundary_inf_product(c, Point{0.0, 0.0}, Point{0.0, 0.0});
  EXPECT_TRUE(e.attained);
  EXPECT_DOUBLE_EQ(e.value, 4.0);
}

TEST(Solver, GoldenAndTieBreak) {
  const double t = golden_min([](double s) { return (s - 0.3) * (s - 0.3); }, -1.0, 2.0, 1e-12);
  EXPECT_NEAR(t, 0.3, 1e-8);
  EXPECT_TRUE(improves(1.0, Point{0.0, 0.0}, 2.0, Point{-5.0, 0.0}));
  EXPECT_TRUE(improves(1.0, Point{0.0, -1.0}, 1.0 + 1e-14, Point{0.0, 1.0}));
  EXPECT_FALSE(improves(1.0 + 1e-14, Point{0.0, 1.0}, 1.0, Point{0.0, -1.0}));
}

TEST(Solver, PairSupremumDisk) {
  const auto e = sup_pair_product(Domain::ball(2), Point{0.0, 0.0}, Point{0.5, 0.0}, 512);
  EXPECT_NEAR(e.value, 2.0 / std::sqrt(3.0), 1e-10);
  ASSERT_TRUE(e.p.is_finite() && e.q.is_finite());
  EXPECT_NEAR(std::abs(e.p.finite()[0]), 1.0, 1e-6);
  EXPECT_NEAR(std::abs(e.q.finite()[0]), 1.0, 1e-6);
}

TEST(Solver, PairKernelLimits) {
  const Point x{0.0, 1.0}, y{0.0, 2.0};
  const auto inf = ExtendedPoint::infinity();
  const Point p{0.0, 0.0};
  // q -> ∞: |x-y| / sqrt(|x-p||y-p|).
  EXPECT_NEAR(pair_kernel(x, y, p, inf), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(pair_kernel(x, y, inf, p), 1.0 / std::sqrt(2.0), 1e-15);
  const Point q{1.0, 0.0};
  const double k = euclid_dist(x, y) * euclid_dist(p, q) /
                   std::sqrt(euclid_dist(x, p) * euclid_dist(y, q) * euclid_dist(x, q) * euclid_dist(y, p));
  EXPECT_NEAR(pair_kernel(x, y, p, q), k, 1e-15);
}

TEST(Solver, UnsupportedDomains) {
  EXPECT_THROW(sup_pair_product(Domain::ball(3), Point{0.0, 0.0, 0.0}, Point{0.5, 0.0, 0.0}, 64), Error);
  EXPECT_THROW(oracle_min_product(Domain::ball(2), Point{0.0, 0.0}, Point{0.5, 0.0}, 10), Error);
}
