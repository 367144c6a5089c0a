#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypmet/domain.hpp"
#include "hypmet/sampling.hpp"

using namespace hypmet;

namespace {

Domain unit_square() { return Domain::polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}); }

}  // namespace

TEST(Domains, BallAndHalfSpaceMembership) {
  const auto b = Domain::ball(2), h = Domain::halfspace(3);
  EXPECT_TRUE(b.contains(Point{0.5, 0.5}));
  EXPECT_FALSE(b.contains(Point{1.0, 0.0}));
  EXPECT_DOUBLE_EQ(b.signed_distance(Point{0.6, 0.0}), 0.4);
  EXPECT_DOUBLE_EQ(b.signed_distance(Point{2.0, 0.0}), -1.0);
  EXPECT_TRUE(h.contains(Point{5.0, -3.0, 0.1}));
  EXPECT_FALSE(h.contains(Point{5.0, -3.0, 0.0}));
  EXPECT_DOUBLE_EQ(dist_to_boundary(h, Point{5.0, -3.0, 0.25}), 0.25);
  EXPECT_THROW(b.contains(Point{0.0, 0.0, 0.0}), Error);
  EXPECT_THROW(Domain::ball(1), Error);
  EXPECT_FALSE(h.bounded());
  EXPECT_EQ(b.describe(), "ball:2");
}

TEST(Domains, RequireInside) {
  try {
    Domain::ball(2).require_inside(Point{1.5, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutsideDomain);
  }
}

TEST(Domains, PolygonOrientationAndDistance) {
  const auto sq = Domain::polygon({{0.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, 0.0}});  // clockwise
  const auto& p = std::get<Polygon2D>(sq.variant());
  EXPECT_EQ(p.vertices()[0], (Point{1.0, 0.0}));
  EXPECT_EQ(p.vertices()[1], (Point{1.0, 1.0}));
  EXPECT_DOUBLE_EQ(p.perimeter(), 4.0);
  EXPECT_EQ(p.winding_number(Point{0.5, 0.5}), 1);
  EXPECT_EQ(p.winding_number(Point{2.0, 0.5}), 0);
  EXPECT_DOUBLE_EQ(sq.signed_distance(Point{0.25, 0.5}), 0.25);
  EXPECT_DOUBLE_EQ(sq.signed_distance(Point{2.0, 0.5}), -1.0);
  EXPECT_EQ(sq.signed_distance(Point{1.0, 0.5}), 0.0);
  EXPECT_EQ(p.at_arclength(1.5), (Point{0.5, 1.0}));
  EXPECT_EQ(p.at_arclength(5.5), (Point{0.5, 1.0}));
}

TEST(Domains, PolygonValidation) {
  EXPECT_THROW(Domain::polygon({{0.0, 0.0}, {1.0, 0.0}}), Error);
  EXPECT_THROW(Domain::polygon({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}), Error);
  EXPECT_THROW(Domain::polygon({{0.0, 0.0}, {1.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}}), Error);  // bow tie
  EXPECT_THROW(Domain::polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}), Error);
}

TEST(Domains, JsonLoading) {
  const auto d = Domain::polygon_from_json(R"({"vertices": [[0,0],[2,0],[0,2]]})");
  EXPECT_EQ(d.kind(), DomainKind::Polygon2D);
  EXPECT_TRUE(d.contains(Point{0.5, 0.5}));
  const auto c = Domain::cloud_from_json(R"({"points": [[1,0,0],[0,1,0],[0,0,1]]})");
  EXPECT_EQ(c.dim(), 3u);
  try {
    Domain::polygon_from_json(R"({"points": []})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
  }
  EXPECT_THROW(Domain::polygon_from_json("{"), Error);
}

TEST(Domains, CloudDistance) {
  const auto c = Domain::cloud({{1.0, 0.0}, {-1.0, 0.0}, {0.0, 2.0}});
  EXPECT_DOUBLE_EQ(c.signed_distance(Point{0.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(dist_to_boundary(c, Point{0.0, 1.5}), 0.5);
  EXPECT_THROW(Domain::cloud({}), Error);
}

TEST(Domains, Similarity) {
  const auto sq = unit_square();
  const auto img = sq.similarity(2.0, {0.0, -1.0, 1.0, 0.0}, Point{1.0, 1.0});
  EXPECT_TRUE(img.contains(Point{0.0, 2.0}));
  EXPECT_FALSE(img.contains(Point{2.0, 2.0}));
  EXPECT_THROW(Domain::ball(2).similarity(2.0, {}, Point{0.0, 0.0}), Error);
}

TEST(Domains, BoundaryInfProductBall) {
  const auto e = boundary_inf_product(Domain::ball(2), Point{0.0, 0.5}, Point{0.0, -0.5});
  EXPECT_NEAR(e.value, 0.75, 1e-15);
  // Symmetric minimizers (0, ±1); the lexicographically smaller one is reported.
  EXPECT_LE(euclid_dist(e.argmin, Point{0.0, -1.0}), 1e-12);
}

TEST(Domains, BoundaryInfProductPolygon) {
  const auto e = boundary_inf_product(unit_square(), Point{0.5, 0.25}, Point{0.5, 0.25});
  EXPECT_NEAR(e.value, 0.0625, 1e-15);
  // The minimum is flat, so its location is only good to about sqrt(eps).
  EXPECT_LE(euclid_dist(e.argmin, Point{0.5, 0.0}), 1e-7);
}

TEST(Domains, HalfPlaneParamPassesInfinity) {
  const auto p = boundary_param(Domain::halfspace(2));
  EXPECT_TRUE(p.at(0.0).is_infinite());
  EXPECT_NEAR(p.at(0.5 * p.period).finite()[0], 0.0, 1e-15);
  EXPECT_THROW(boundary_param(Domain::ball(3)), Error);
}

TEST(Domains, Densify) {
  const auto pts = densify(Domain::ball(3), 500);
  ASSERT_EQ(pts.size(), 500u);
  for (const auto& p : pts) EXPECT_NEAR(p.norm(), 1.0, 1e-14);
  const auto hp = densify(Domain::halfspace(2), 100, 10.0);
  for (const auto& p : hp) {
    EXPECT_EQ(p[1], 0.0);
    EXPECT_LE(std::abs(p[0]), 10.0 + 1e-12);
  }
}

TEST(Domains, ImageCloud) {
  const auto f = canonical_h2b(2);
  const auto img = image_cloud(Domain::halfspace(2), f, 1000, 100.0);
  for (const auto& p : std::get<BoundaryCloud>(img.variant()).samples()) EXPECT_NEAR(p.norm(), 1.0, 1e-12);
}

TEST(Ovals, Classification) {
  const Point f1{-1.0, 0.0}, f2{1.0, 0.0};
  EXPECT_EQ(oval_classify(CassinianOval(f1, f2, 0.7)), OvalShape::TwoLoops);
  EXPECT_EQ(oval_classify(CassinianOval(f1, f2, 1.0)), OvalShape::Lemniscate);
  EXPECT_EQ(oval_classify(CassinianOval(f1, f2, std::sqrt(1.3))), OvalShape::Peanut);
  EXPECT_EQ(oval_classify(CassinianOval(f1, f2, std::sqrt(2.0))), OvalShape::Convex);
  EXPECT_EQ(oval_classify(CassinianOval(f1, f1, 1.0)), OvalShape::Circle);
  EXPECT_STREQ(to_string(OvalShape::Peanut), "Peanut");
  EXPECT_THROW(CassinianOval(f1, f2, 0.0), Error);
}

TEST(Ovals, LemniscateTrace) {
  const CassinianOval c(Point{-1.0, 0.0}, Point{1.0, 0.0}, 1.0);
  EXPECT_DOUBLE_EQ(oval_max_radius(c), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(c.e(), 1.0);
  const auto tr = oval_trace(c, 720);
  ASSERT_FALSE(tr.empty());
  double rmax = 0.0;
  for (const auto& p : tr) {
    EXPECT_NEAR(euclid_dist(p.p, c.focus1()) * euclid_dist(p.p, c.focus2()), 1.0, 1e-9);
    rmax = std::max(rmax, p.p.norm());
  }
  EXPECT_NEAR(rmax, std::sqrt(2.0), 1e-12);
}

TEST(Ovals, TwoLoopsHaveBothBranches) {
  const CassinianOval c(Point{2.0, 1.0}, Point{4.0, 1.0}, 0.8);
  bool plus = false, minus = false;
  for (const auto& p : oval_trace(c, 2000)) {
    plus = plus || p.branch == 1;
    minus = minus || p.branch == -1;
    EXPECT_NEAR(euclid_dist(p.p, c.focus1()) * euclid_dist(p.p, c.focus2()), 0.64, 1e-9);
  }
  EXPECT_TRUE(plus && minus);
}

TEST(Ovals, MaximalOvalInDisk) {
  const auto mo = maximal_oval(Domain::ball(2), Point{0.0, 0.5}, Point{0.0, -0.5});
  EXPECT_NEAR(mo.oval.b() * mo.oval.b(), 0.75, 1e-15);
  EXPECT_LE(euclid_dist(mo.tangent, Point{0.0, -1.0}), 1e-12);
  EXPECT_THROW(maximal_oval(Domain::ball(2), Point{0.1, 0.1}, Point{0.1, 0.1}), Error);
}

TEST(Ovals, MaximalOvalStaysInside) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 30; ++k) {
    const auto d = random_convex_polygon(rng);
    const Point x = sample_in(rng, d), y = sample_in(rng, d);
    const auto mo = maximal_oval(d, x, y);
    EXPECT_NEAR(d.signed_distance(mo.tangent), 0.0, 1e-9);
    for (const auto& p : oval_trace(mo.oval, 720)) EXPECT_GE(d.signed_distance(p.p), -1e-7);
  }
}

TEST(Sampling, Reproducible) {
  auto a = trial_rng(42, 7), b = trial_rng(42, 7), c = trial_rng(42, 8);
  const double ua = uniform(a, 0.0, 1.0);
  EXPECT_EQ(ua, uniform(b, 0.0, 1.0));
  EXPECT_NE(ua, uniform(c, 0.0, 1.0));
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(Sampling, SamplesLieInDomain) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    EXPECT_TRUE(Domain::ball(3).contains(sample_ball(rng, 3)));
    const Point h = sample_halfspace(rng, 2);
    EXPECT_GE(h[1], 1e-3 * (1 - 1e-12));
    EXPECT_LE(h[1], 1e3 * (1 + 1e-12));
    const auto poly = random_convex_polygon(rng);
    const auto& pg = std::get<Polygon2D>(poly.variant());
    EXPECT_GE(pg.size(), 8u);
    EXPECT_LE(pg.size(), 32u);
    EXPECT_TRUE(poly.contains(sample_polygon(rng, poly)));
  }
}

TEST(Sampling, MoebiusAvoidingKeepsPoleOutside) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    const auto d = k % 2 ? Domain::ball(2) : random_convex_polygon(rng);
    const auto f = random_moebius_avoiding(rng, d);
    const auto pole = f.pole();
    if (pole.is_finite()) EXPECT_LT(d.signed_distance(pole.finite()), 0.0);
  }
}
