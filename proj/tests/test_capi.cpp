#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "hypmet/hypmet.h"
#include "json.hpp"

namespace {

std::string take(char* s) {
  std::string out(s);
  hm_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, EvalHalfPlane) {
  hm_domain* d = nullptr;
  ASSERT_EQ(hm_domain_halfspace(2, &d), HM_OK);
  const double x[] = {0.0, 2.0}, y[] = {0.0, 0.5};
  hm_result r{};
  ASSERT_EQ(hm_eval(d, nullptr, HM_TTAU, HM_AUTO, x, y, 2, nullptr, &r), HM_OK);
  EXPECT_NEAR(r.value, std::log(2.5), 1e-12);
  EXPECT_EQ(r.method, HM_CLOSED);
  ASSERT_EQ(r.n_witnesses, 1u);
  EXPECT_EQ(r.witness_infinite[0], 0);
  EXPECT_NEAR(r.witness[0][0], 0.0, 1e-12);
  ASSERT_EQ(hm_eval(d, nullptr, HM_RHO, HM_AUTO, x, y, 2, nullptr, &r), HM_OK);
  EXPECT_NEAR(r.value, std::log(4.0), 1e-12);
  hm_domain_free(d);
}

TEST(CApi, ErrorCodes) {
  hm_domain* d = nullptr;
  ASSERT_EQ(hm_domain_ball(2, &d), HM_OK);
  const double x[] = {1.5, 0.0}, y[] = {0.0, 0.0};
  hm_result r{};
  EXPECT_EQ(hm_eval(d, nullptr, HM_RHO, HM_AUTO, x, y, 2, nullptr, &r), HM_OUTSIDE_DOMAIN);
  EXPECT_NE(std::string(hm_last_error()).find("not in"), std::string::npos);
  EXPECT_EQ(hm_eval(d, nullptr, HM_RHO, HM_AUTO, x, y, 3, nullptr, &r), HM_DIMENSION);
  EXPECT_EQ(hm_eval(d, nullptr, HM_RHO, HM_AUTO, nullptr, y, 2, nullptr, &r), HM_INVALID_ARGUMENT);
  const double a[] = {0.1, 0.2}, b[] = {0.3, 0.3};
  EXPECT_EQ(hm_eval(d, nullptr, HM_TTAU, HM_CLOSED, a, b, 2, nullptr, &r), HM_UNSUPPORTED);
  EXPECT_EQ(hm_eval(d, nullptr, HM_RHO, HM_ORACLE, a, b, 2, nullptr, &r), HM_UNSUPPORTED);
  hm_domain_free(d);
  EXPECT_EQ(hm_domain_ball(1, &d), HM_INVALID_ARGUMENT);
  EXPECT_EQ(hm_domain_from_spec("sphere:2", &d), HM_PARSE);
  EXPECT_EQ(hm_domain_from_spec("ball:x", &d), HM_PARSE);
  EXPECT_EQ(hm_domain_from_spec("polygon:/nonexistent/file.json", &d), HM_IO);
  hm_domain_free(nullptr);
  hm_map_free(nullptr);
}

TEST(CApi, DomainSpecs) {
  const std::string path = ::testing::TempDir() + "capi_square.json";
  std::ofstream(path) << R"({"vertices": [[0,0],[1,0],[1,1],[0,1]]})";
  hm_domain* d = nullptr;
  ASSERT_EQ(hm_domain_from_spec(("polygon:" + path).c_str(), &d), HM_OK);
  size_t n = 0;
  ASSERT_EQ(hm_domain_dim(d, &n), HM_OK);
  EXPECT_EQ(n, 2u);
  const double p[] = {0.25, 0.5};
  double sd = 0.0;
  ASSERT_EQ(hm_domain_signed_distance(d, p, 2, &sd), HM_OK);
  EXPECT_DOUBLE_EQ(sd, 0.25);
  char* desc = nullptr;
  ASSERT_EQ(hm_domain_describe(d, &desc), HM_OK);
  EXPECT_EQ(take(desc), "polygon(4)");
  hm_domain_free(d);

  const double xy[] = {0, 0, 2, 0, 0, 2};
  ASSERT_EQ(hm_domain_polygon(xy, 3, &d), HM_OK);
  hm_domain_free(d);
  const double pts[] = {1, 0, 0, 1, -1, 0};
  ASSERT_EQ(hm_domain_cloud(pts, 3, 2, &d), HM_OK);
  hm_domain_free(d);
  std::remove(path.c_str());
}

TEST(CApi, Maps) {
  hm_map* f = nullptr;
  ASSERT_EQ(hm_map_canonical_h2b(2, &f), HM_OK);
  const double x[] = {0.0, 1.0};
  double y[2];
  int inf = 1;
  ASSERT_EQ(hm_map_apply(f, x, 0, 2, y, &inf), HM_OK);
  EXPECT_EQ(inf, 0);
  EXPECT_NEAR(std::hypot(y[0], y[1]), 0.0, 1e-15);
  char* js = nullptr;
  ASSERT_EQ(hm_map_to_json(f, &js), HM_OK);
  const std::string text = take(js);
  hm_map* g = nullptr;
  ASSERT_EQ(hm_map_from_json(text.c_str(), 2, &g), HM_OK);
  ASSERT_EQ(hm_map_apply(g, nullptr, 1, 2, y, &inf), HM_OK);
  EXPECT_NEAR(y[1], -1.0, 1e-15);
  EXPECT_EQ(hm_map_from_json("[{\"op\":\"shear\"}]", 2, &g), HM_PARSE);

  hm_domain* h = nullptr;
  ASSERT_EQ(hm_domain_halfspace(2, &h), HM_OK);
  const double a[] = {0.3, 2.0}, b[] = {-1.0, 0.1};
  hm_result r{};
  ASSERT_EQ(hm_eval(h, f, HM_TTAU, HM_AUTO, a, b, 2, nullptr, &r), HM_OK);
  EXPECT_EQ(r.method, HM_NUMERIC);
  EXPECT_GT(r.value, 0.0);
  hm_domain_free(h);
  hm_map_free(f);
  hm_map_free(g);
}

TEST(CApi, BoundsAndOvals) {
  const double x[] = {0.0, 0.5}, y[] = {0.0, -0.5};
  double lo = 0, up = 0;
  int has = 0;
  ASSERT_EQ(hm_bounds(0, x, y, &lo, &up, &has), HM_OK);
  EXPECT_EQ(has, 1);
  EXPECT_NEAR(lo, up, 1e-12);

  const double f1[] = {-1.0, 0.0}, f2[] = {1.0, 0.0};
  hm_oval_info info{};
  ASSERT_EQ(hm_oval_info_get(f1, f2, 1.0, &info), HM_OK);
  EXPECT_STREQ(info.shape, "Lemniscate");
  EXPECT_NEAR(info.max_radius, std::sqrt(2.0), 1e-15);
  size_t count = 0;
  ASSERT_EQ(hm_oval_trace(f1, f2, 1.0, 720, nullptr, 0, &count), HM_OK);
  ASSERT_GT(count, 0u);
  std::vector<double> rows(4 * count);
  ASSERT_EQ(hm_oval_trace(f1, f2, 1.0, 720, rows.data(), count, &count), HM_OK);
  EXPECT_NEAR(std::hypot(rows[2], rows[3]), std::sqrt(2.0), 1e-12);

  hm_domain* d = nullptr;
  ASSERT_EQ(hm_domain_ball(2, &d), HM_OK);
  double b = 0, t[2];
  ASSERT_EQ(hm_maximal_oval(d, x, y, 2, &b, t), HM_OK);
  EXPECT_NEAR(b * b, 0.75, 1e-15);
  EXPECT_NEAR(t[1], -1.0, 1e-12);
  EXPECT_EQ(hm_maximal_oval(d, x, x, 2, &b, t), HM_INVALID_ARGUMENT);
  hm_domain_free(d);
}

TEST(CApi, Verification) {
  char* js = nullptr;
  ASSERT_EQ(hm_suite_names(&js), HM_OK);
  const auto names = nlohmann::json::parse(take(js));
  EXPECT_GE(names.size(), 6u);
  int passed = 0;
  ASSERT_EQ(hm_run_suite("ball-sandwich", 50, 42, 0, 0, &js, &passed), HM_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(nlohmann::json::parse(take(js)).at("trials"), 50);
  EXPECT_EQ(hm_run_suite("bogus", 50, 42, 0, 0, &js, &passed), HM_INVALID_ARGUMENT);

  int within = 0;
  ASSERT_EQ(hm_sharpness_probe("half-additive", 0.0, 1, &js, &within), HM_OK);
  EXPECT_EQ(within, 1);
  EXPECT_NEAR(nlohmann::json::parse(take(js)).at("observed").get<double>(), std::log(1.25), 1e-12);
  int ok = 0;
  ASSERT_EQ(hm_sharpness_ladder("moeb-upper", &js, &ok), HM_OK);
  EXPECT_EQ(ok, 1);
  EXPECT_EQ(nlohmann::json::parse(take(js)).size(), 4u);
  ASSERT_EQ(hm_sequence_names(&js), HM_OK);
  EXPECT_EQ(nlohmann::json::parse(take(js)).size(), 8u);
}

TEST(CApi, Version) { EXPECT_STREQ(hm_version(), "0.1.0"); }
