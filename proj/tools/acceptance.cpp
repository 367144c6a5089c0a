// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <numbers>
#include <string>
#include <vector>

#include "hypmet/metrics.hpp"
#include "hypmet/sampling.hpp"
#include "hypmet/solver.hpp"
#include "hypmet/verify.hpp"

using namespace hypmet;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double oracle_ttau(const Domain& d, const Point& x, const Point& y, std::size_t samples) {
  const double g = oracle_min_product(d, x, y, samples).value;
  return std::log1p(euclid_dist(x, y) / std::sqrt(g));
}

Point on_circle(double r, double th) { return Point{r * std::cos(th), r * std::sin(th)}; }

// 1. Closed forms against the brute-force oracle.
Outcome closed_vs_oracle() {
  const auto t0 = Clock::now();
  const Domain B = Domain::ball(2), H = Domain::halfspace(2);
  constexpr std::size_t pairs = 1000, samples = 100'000;
  double worst = 0.0;
  std::string worst_family;
  int eq_case1 = 0, eq_case2 = 0, same_side = 0, opposite = 0, eh_far = 0, eh_near = 0;
  auto family = [&](const char* name, std::uint64_t seed, const std::function<std::pair<Point, Point>(std::mt19937_64&)>& gen,
                    const Domain& d, const std::function<double(const Point&, const Point&)>& closed) {
    for (std::size_t i = 0; i < pairs; ++i) {
      auto rng = trial_rng(seed, i);
      const auto [x, y] = gen(rng);
      const double err = std::abs(closed(x, y) - oracle_ttau(d, x, y, samples));
      if (err > worst) {
        worst = err;
        worst_family = name;
      }
    }
  };
  family("equal-norm", 1, [&](std::mt19937_64& rng) {
    const double r = uniform(rng, 0.01, 0.99);
    const double a = uniform(rng, 0.0, 2 * std::numbers::pi), b = uniform(rng, 0.0, 2 * std::numbers::pi);
    Point x = on_circle(r, a), y = on_circle(r, b);
    ((x + y).norm() <= 4 * r * r / (1 + r * r) ? eq_case1 : eq_case2)++;
    return std::pair{x, y};
  }, B, ttau_ball_equal_norm);
  family("collinear", 2, [&](std::mt19937_64& rng) {
    const double th = uniform(rng, 0.0, 2 * std::numbers::pi);
    const double s = uniform(rng, -0.99, 0.99), t = uniform(rng, -0.99, 0.99);
    (s * t >= 0 ? same_side : opposite)++;
    return std::pair{on_circle(s, th), on_circle(t, th)};
  }, B, ttau_ball_collinear);
  family("equal-height", 3, [&](std::mt19937_64& rng) {
    const double h = std::exp(uniform(rng, std::log(1e-2), std::log(1e2)));
    const double c = uniform(rng, -10.0, 10.0), L = h * std::exp(uniform(rng, std::log(1e-2), std::log(1e2)));
    (L > 2 * h ? eh_far : eh_near)++;
    return std::pair{Point{c - 0.5 * L, h}, Point{c + 0.5 * L, h}};
  }, H, ttau_halfplane_equal_height);
  family("vertical", 4, [&](std::mt19937_64& rng) {
    const double c = uniform(rng, -10.0, 10.0);
    const double a = std::exp(uniform(rng, std::log(1e-2), std::log(1e2)));
    const double b = std::exp(uniform(rng, std::log(1e-2), std::log(1e2)));
    return std::pair{Point{c, a}, Point{c, b}};
  }, H, ttau_halfplane_vertical);
  const double secs = seconds_since(t0);
  const bool covered = eq_case1 && eq_case2 && same_side && opposite && eh_far && eh_near;
  const bool pass = worst <= 1e-7 && secs < 60.0 && covered;
  return {pass, "max |closed - oracle| = " + fmt("%.3g", worst) + " (" + worst_family + "), " +
                    "equal-norm cases " + std::to_string(eq_case1) + "/" + std::to_string(eq_case2) +
                    ", collinear same/opposite " + std::to_string(same_side) + "/" + std::to_string(opposite) +
                    ", equal-height far/near " + std::to_string(eh_far) + "/" + std::to_string(eh_near) + ", " +
                    fmt("%.1f s", secs)};
}

// 2. Point values in the half-space.
Outcome point_values() {
  double worst = 0.0;
  for (std::size_t n : {2, 3, 4}) {
    const Domain H = Domain::halfspace(n);
    const Point x = 2.0 * Point::unit(n, n - 1), y = 0.5 * Point::unit(n, n - 1);
    const double t = ttau(H, x, y).value, r = rho(H, x, y).value;
    worst = std::max({worst, std::abs(t - std::log(2.5)), std::abs(r - std::log(4.0)),
                      std::abs(t - (0.5 * r + std::log(1.25)))});
  }
  return {worst <= 1e-12, "max deviation " + fmt("%.3g", worst) + " over n = 2, 3, 4"};
}

// 3. Sharpness sequences at desk scale.
Outcome sharpness() {
  struct Row {
    SequenceId id;
    double t, target, tol;
  };
  const Row rows[] = {
      {SequenceId::BallLower, 1.0 - 1e-6, 0.25, 0.005},
      {SequenceId::BallUpper, 1.0 - 1e-3, 1.0, 0.01},
      {SequenceId::BallAdditive, 1e-4, std::log(1.25), 1e-3},
      {SequenceId::HalfLower, 1e8, 0.25, 0.005},
      {SequenceId::HalfAdditive, 2.0, std::log(1.25), 1e-12},
      {SequenceId::MoebLower, 1e6, 0.5, 0.001},
      {SequenceId::MoebUpper, 1e6, 1.949, 0.01},
  };
  bool pass = true;
  std::string detail;
  for (const auto& r : rows) {
    const double v = sharpness_probe(r.id, r.t).observed;
    const bool ok = std::abs(v - r.target) <= r.tol;
    pass = pass && ok;
    detail += std::string(to_string(r.id)) + "=" + fmt("%.7g", v) + (ok ? " " : "(!) ");
  }
  double prev = 0.0;
  bool increasing = true;
  for (double t : {1e3, 1e6, 1e9, 1e12}) {
    const double v = sharpness_probe(SequenceId::MoebUpper, t).observed;
    increasing = increasing && v > prev && v < 2.0;
    prev = v;
  }
  pass = pass && increasing;
  detail += increasing ? "moeb-upper increasing below 2" : "moeb-upper NOT increasing";
  return {pass, detail};
}

struct SuiteRun {
  std::string name;
  std::size_t trials;
  SuiteReport report;
};

std::vector<SuiteRun> run_parallel(std::vector<std::pair<std::string, std::size_t>> jobs, const SuiteOptions& o = {}) {
  std::vector<std::future<SuiteRun>> fs;
  for (auto& [name, trials] : jobs)
    fs.push_back(std::async(std::launch::async, [name, trials, o] {
      return SuiteRun{name, trials, run_suite(name, trials, 42, o)};
    }));
  std::vector<SuiteRun> out;
  for (auto& f : fs) out.push_back(f.get());
  return out;
}

Outcome suites(const std::vector<std::pair<std::string, std::size_t>>& jobs, double budget_s) {
  const auto t0 = Clock::now();
  const auto runs = run_parallel(jobs);
  bool pass = true;
  std::string detail;
  for (const auto& r : runs) {
    pass = pass && r.report.passed();
    detail += r.name + " " + std::to_string(r.report.violation_count) + "/" + std::to_string(r.report.checks) + ", ";
  }
  const double secs = seconds_since(t0);
  if (budget_s > 0) pass = pass && secs < budget_s;
  return {pass, detail + "violations/checks, " + fmt("%.1f s", secs)};
}

// 7. Cross-formula consistency.
Outcome cross_formulas() {
  const Domain B = Domain::ball(2), H = Domain::halfspace(2);
  double ball_axis = 0.0, half_axis = 0.0, absratio = 0.0;
  for (std::size_t i = 0; i < 1000; ++i) {
    auto rng = trial_rng(7, i);
    const double th = uniform(rng, 0.0, 2 * std::numbers::pi);
    double r = uniform(rng, -0.999, 0.999), s = uniform(rng, -0.999, 0.999);
    if (r > s) std::swap(r, s);
    const Point e = on_circle(1.0, th);
    ball_axis = std::max(ball_axis, std::abs(rho(B, r * e, s * e).value - rho_axis(AxisKind::Ball, r, s)));
    const double c = uniform(rng, -5.0, 5.0);
    double a = std::exp(uniform(rng, -5.0, 5.0)), b = std::exp(uniform(rng, -5.0, 5.0));
    if (a > b) std::swap(a, b);
    half_axis =
        std::max(half_axis, std::abs(rho(H, Point{c, a}, Point{c, b}).value - rho_axis(AxisKind::HalfSpace, a, b)));
    const Domain& d = i % 2 ? B : H;
    const Point x = sample_in(rng, d), y = sample_in(rng, d);
    absratio = std::max(absratio, std::abs(rho_sup_absratio(d, x, y).value - rho(d, x, y).value));
  }
  const bool pass = ball_axis <= 1e-12 && half_axis <= 1e-12 && absratio <= 1e-4;
  return {pass, "ball axis " + fmt("%.3g", ball_axis) + ", half-space axis " + fmt("%.3g", half_axis) +
                    ", sup absolute ratio " + fmt("%.3g", absratio)};
}

// 8. Plane reduction in dimension three against a dense spatial oracle.
Outcome reduction3() {
  const auto t0 = Clock::now();
  const Domain B = Domain::ball(3), H = Domain::halfspace(3);
  constexpr std::size_t pairs = 200;
  std::vector<std::future<double>> fs;
  for (std::size_t i = 0; i < pairs; ++i) {
    fs.push_back(std::async(std::launch::async, [&, i] {
      auto rng = trial_rng(8, i);
      const Domain& d = i % 2 ? B : H;
      const Point x = sample_in(rng, d), y = sample_in(rng, d);
      return std::abs(ttau(d, x, y).value - oracle_ttau(d, x, y, 1'000'000));
    }));
  }
  double worst = 0.0;
  for (auto& f : fs) worst = std::max(worst, f.get());
  return {worst <= 1e-5, "max |reduced - oracle| = " + fmt("%.3g", worst) + " over " + std::to_string(pairs) +
                             " pairs (B^3, H^3), " + fmt("%.1f s", seconds_since(t0))};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"closed forms match the boundary oracle", closed_vs_oracle},
      {"half-space point values", point_values},
      {"sharpness constants", sharpness},
      {"inequality suites",
       [] {
         return suites({{"ball-sandwich", 100000},
                        {"halfspace-sandwich", 100000},
                        {"j-sandwich", 100000},
                        {"tau-sandwich", 1000},
                        {"bounds-sandwich", 100000},
                        {"rotation-ordering", 100000}},
                       300.0);
       }},
      {"Moebius properties",
       [] {
         return suites(
             {{"absratio-invariance", 100000}, {"moebius-distortion", 10000}, {"tau-moebius-invariance", 100}}, 0.0);
       }},
      {"oval geometry", [] { return suites({{"oval-geometry", 1000}}, 0.0); }},
      {"cross-formula consistency", cross_formulas},
      {"plane reduction in dimension three", reduction3},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
