#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPMET_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, EvalValues) {
  auto r = run("eval --metric ttau --domain halfspace:2 --x 0,2 --y 0,0.5");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("value"), 0.9162907319);
  EXPECT_EQ(j.at("method"), "closed");
  r = run("eval --metric rho --domain ball:2 --x 0.5,0 --y -0.5,0");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(r.out).at("value").get<double>(), 2.1972245773, 1e-9);
  r = run("--precision 17 eval --metric rho --domain ball:2 --x 0.5,0 --y -0.5,0");
  EXPECT_NEAR(nlohmann::json::parse(r.out).at("value").get<double>(), std::log(9.0), 1e-15);
  r = run("eval --metric ttau --domain ball:2 --x 0.1,0.2 --y 0.1,0.2");
  EXPECT_EQ(nlohmann::json::parse(r.out).at("value"), 0.0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("eval --metric ttau --domain ball:2 --x 1.5,0 --y 0,0").code, 3);
  EXPECT_EQ(run("eval --metric ttau --domain ball:2 --x a,0 --y 0,0").code, 2);
  EXPECT_EQ(run("eval --metric bogus --domain ball:2 --x 0,0 --y 0,0").code, 2);
  EXPECT_EQ(run("eval --metric ttau --domain ball:2 --x 0,0,0 --y 0,0").code, 2);
  EXPECT_EQ(run("eval --metric tau --domain ball:3 --x 0,0,0 --y 0.1,0,0").code, 3);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("oval --foci \"1,0;1,0\" --b 1").code, 3);
  EXPECT_EQ(run("verify --suite nonexistent").code, 2);
  EXPECT_EQ(run("sharpness --sequence nonexistent").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, EvalWithMap) {
  const auto poly = temp_file("cli_rect.json", R"({"vertices": [[0,0],[2,0],[2,1],[0,1]]})");
  const auto map = temp_file("cli_map.json", R"([{"op":"translate","v":[3,0]},{"op":"invert"}])");
  const auto bad = temp_file("cli_bad.json", R"([{"op":"translate","v":[-1,-0.5]},{"op":"invert"}])");
  auto r = run("eval --metric ttau --domain polygon:" + poly + " --x 0.5,0.5 --y 1.5,0.3 --map " + map);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("method"), "numeric");
  EXPECT_EQ(run("eval --metric ttau --domain polygon:" + poly + " --x 0.5,0.5 --y 1.5,0.3 --map " + bad).code, 3);
}

TEST(Cli, OvalTrace) {
  const std::string meta = ::testing::TempDir() + "cli_meta.json";
  auto r = run("oval --foci \"-1,0;1,0\" --b 1 --samples 720 --meta " + meta);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 17), "theta,branch,x,y\n");
  std::ifstream in(meta);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("class"), "Lemniscate");
  EXPECT_NEAR(j.at("max_radius").get<double>(), std::sqrt(2.0), 1e-9);

  run("oval --foci \"-1,0;1,0\" --b 1.140175425 --meta " + meta);
  std::ifstream in2(meta);
  EXPECT_EQ(nlohmann::json::parse(in2).at("class"), "Peanut");

  r = run("oval --domain ball:2 --x 0,0.5 --y 0,-0.5 --meta " + meta);
  ASSERT_EQ(r.code, 0);
  std::ifstream in3(meta);
  const auto m = nlohmann::json::parse(in3);
  EXPECT_NEAR(m.at("b_squared").get<double>(), 0.75, 1e-12);
  EXPECT_NEAR(std::abs(m.at("tangent")[1].get<double>()), 1.0, 1e-12);
}

TEST(Cli, Compare) {
  const auto pairs = temp_file("cli_pairs.csv", "0,0.5,0,-0.5\n0.1,0.2,-0.4,0.3\n");
  auto r = run("compare --domain ball:2 --pairs " + pairs);
  ASSERT_EQ(r.code, 0);
  std::istringstream rows(r.out);
  std::string header, first;
  std::getline(rows, header);
  std::getline(rows, first);
  EXPECT_EQ(header, "index,rho,j,ttau,tau,lower,upper,rho_sandwich,j_sandwich,bounds_sandwich,tau_sandwich");
  EXPECT_NE(first.find(",0.7676517526,"), std::string::npos) << first;
  EXPECT_EQ(first.find("false"), std::string::npos);

  const auto empty = temp_file("cli_empty.csv", "");
  r = run("compare --domain ball:2 --pairs " + empty);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, header + "\n");

  const auto bad = temp_file("cli_badpairs.csv", "0,0.5,0\n");
  EXPECT_EQ(run("compare --domain ball:2 --pairs " + bad).code, 2);
}

TEST(Cli, VerifyAndSharpness) {
  auto r = run("verify --suite ball-sandwich --trials 200 --seed 42");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("violation_count"), 0);
  EXPECT_EQ(run("verify --suite ball-sandwich --trials 200 --seed 42").out, r.out);
  r = run("sharpness --sequence half-additive");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(r.out).at("observed").get<double>(), std::log(1.25), 1e-9);
  r = run("sharpness --sequence ball-lower --param 0.999999");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(r.out).at("observed").get<double>(), 0.25, 0.005);
  // Outside the documented tolerance away from the limit.
  EXPECT_EQ(run("sharpness --sequence ball-lower --param 0.9").code, 1);
  EXPECT_EQ(run("sharpness --sequence moeb-upper --ladder").code, 0);
}

TEST(Cli, SeedFromEnvironment) {
  const auto a = run("verify --suite j-sandwich --trials 50");
  setenv("HYPMET_SEED", "42", 1);
  const auto b = run("verify --suite j-sandwich --trials 50");
  setenv("HYPMET_SEED", "7", 1);
  const auto c = run("verify --suite j-sandwich --trials 50");
  unsetenv("HYPMET_SEED");
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}
