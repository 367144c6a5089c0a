#include "hypmet/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "hypmet/metrics.hpp"
#include "hypmet/moebius.hpp"
#include "hypmet/sampling.hpp"
#include "hypmet/solver.hpp"
#include "json.hpp"

namespace hypmet {

namespace {

constexpr double kSlack = 1e-12;
constexpr std::size_t kMaxRecorded = 50;
const double kLog54 = std::log(1.25);
const double kLog3 = std::log(3.0);

std::string fmt(const Point& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

std::string fmt(const ExtendedPoint& p) { return p.is_infinite() ? "inf" : fmt(p.finite()); }

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) { r_.min_slack = std::numeric_limits<double>::infinity(); }

  void set_trial(std::size_t t) { trial_ = t; }

  // lhs <= rhs + tol
  void le(const char* relation, double lhs, double rhs, const std::function<std::string()>& inputs,
          double tol = kSlack) {
    record(relation, lhs, rhs, rhs - lhs, tol, inputs);
  }

  // |lhs - rhs| <= tol
  void near(const char* relation, double lhs, double rhs, double tol, const std::function<std::string()>& inputs) {
    record(relation, lhs, rhs, -std::abs(lhs - rhs), tol, inputs);
  }

  void finish() {
    if (!std::isfinite(r_.min_slack)) r_.min_slack = 0.0;
  }

 private:
  void record(const char* relation, double lhs, double rhs, double slack, double tol,
              const std::function<std::string()>& inputs) {
    ++r_.checks;
    if (std::isnan(slack)) slack = -std::numeric_limits<double>::infinity();
    r_.min_slack = std::min(r_.min_slack, slack);
    if (slack >= -tol) return;
    ++r_.violation_count;
    r_.max_slack_violation = std::max(r_.max_slack_violation, -slack - tol);
    if (r_.violations.size() < kMaxRecorded) r_.violations.push_back({trial_, relation, inputs(), lhs, rhs, slack});
  }

  SuiteReport& r_;
  std::size_t trial_ = 0;
};

using Suite = std::function<void(Recorder&, std::mt19937_64&, std::size_t, const SuiteOptions&)>;

Domain cycle_domain(std::size_t trial, std::size_t n, std::mt19937_64& rng, bool with_polygon) {
  switch (trial % (with_polygon ? 3 : 2)) {
    case 0: return Domain::ball(n);
    case 1: return Domain::halfspace(n);
    default: return random_convex_polygon(rng);
  }
}

std::function<std::string()> pair_inputs(const Domain& d, const Point& x, const Point& y) {
  return [&d, &x, &y] { return d.describe() + " x=" + fmt(x) + " y=" + fmt(y); };
}

void sandwich_rho(Recorder& rec, const Domain& d, const Point& x, const Point& y) {
  const double r = rho(d, x, y).value;
  const double t = ttau(d, x, y).value;
  const auto in = pair_inputs(d, x, y);
  rec.le("rho/4 <= ttau", 0.25 * r, t, in);
  rec.le("ttau <= rho", t, r, in);
  rec.le("ttau <= rho/2 + log(5/4)", t, 0.5 * r + kLog54, in);
}

void suite_ball_sandwich(Recorder& rec, std::mt19937_64& rng, std::size_t, const SuiteOptions& o) {
  const Domain d = Domain::ball(o.dim);
  const Point x = sample_in(rng, d), y = sample_in(rng, d);
  sandwich_rho(rec, d, x, y);
}

void suite_halfspace_sandwich(Recorder& rec, std::mt19937_64& rng, std::size_t, const SuiteOptions& o) {
  const Domain d = Domain::halfspace(o.dim);
  const Point x = sample_in(rng, d), y = sample_in(rng, d);
  sandwich_rho(rec, d, x, y);
}

void suite_j_sandwich(Recorder& rec, std::mt19937_64& rng, std::size_t trial, const SuiteOptions& o) {
  const Domain d = cycle_domain(trial, o.dim, rng, true);
  const Point x = sample_in(rng, d), y = sample_in(rng, d);
  const auto in = pair_inputs(d, x, y);
  const double j = j_metric(d, x, y).value;
  const double t = ttau(d, x, y).value;
  if (d.kind() != DomainKind::Polygon2D) {
    const double r = rho(d, x, y).value;
    rec.le("rho/2 <= j", 0.5 * r, j, in);
    rec.le("j <= rho", j, r, in);
  }
  rec.le("j/2 <= ttau", 0.5 * j, t, in);
  rec.le("ttau <= j", t, j, in);
  rec.le("ttau <= j/2 + log(3)/2", t, 0.5 * j + 0.5 * kLog3, in);
}

void suite_tau_sandwich(Recorder& rec, std::mt19937_64& rng, std::size_t trial, const SuiteOptions& o) {
  const Domain d = cycle_domain(trial, 2, rng, true);
  const Point x = sample_in(rng, d), y = sample_in(rng, d);
  const auto in = pair_inputs(d, x, y);
  const double t = ttau(d, x, y).value;
  const double T = tau(d, x, y, o.tau_budget).value;
  rec.le("tau/2 <= ttau", 0.5 * T, t, in);
  rec.le("ttau <= tau", t, T, in);
}

void suite_bounds_sandwich(Recorder& rec, std::mt19937_64& rng, std::size_t trial, const SuiteOptions&) {
  const Domain d = cycle_domain(trial, 2, rng, false);
  const Point x = sample_in(rng, d), y = sample_in(rng, d);
  const auto in = pair_inputs(d, x, y);
  const double t = ttau(d, x, y).value;
  const Bounds b = d.kind() == DomainKind::UnitBall ? ttau_bounds_ball(x, y) : ttau_bounds_halfplane(x, y);
  rec.le("lower <= ttau", b.lower, t, in);
  if (b.upper) rec.le("ttau <= upper", t, *b.upper, in);
}

void suite_rotation_ordering(Recorder& rec, std::mt19937_64& rng, std::size_t trial, const SuiteOptions&) {
  const Domain d = cycle_domain(trial, 2, rng, false);
  const Point x = sample_in(rng, d), y = sample_in(rng, d);
  const auto in = pair_inputs(d, x, y);
  const auto rp = extremal_rotations(x, y, d.kind() == DomainKind::UnitBall ? Frame::Ball : Frame::HalfPlane);
  const double t = ttau(d, x, y).value;
  if (d.contains(rp.x2) && d.contains(rp.y2)) rec.le("ttau(x'',y'') <= ttau(x,y)", ttau(d, rp.x2, rp.y2).value, t, in);
  if (d.contains(rp.x1) && d.contains(rp.y1)) rec.le("ttau(x,y) <= ttau(x',y')", t, ttau(d, rp.x1, rp.y1).value, in);
}

double image_ttau(const Domain& d, const MoebiusMap& f, const Point& fx, const Point& fy, std::size_t samples,
                  double center, double scale) {
  if (fx == fy) return 0.0;
  const auto param = push_through(boundary_param(d, center, scale), f);
  const auto e = min_product_param(param, fx, fy, samples);
  return std::log1p(euclid_dist(fx, fy) / std::sqrt(e.value));
}

void suite_moebius_distortion(Recorder& rec, std::mt19937_64& rng, std::size_t trial, const SuiteOptions& o) {
  const Domain d = cycle_domain(trial, 2, rng, false);
  const Point x = sample_in(rng, d), y = sample_in(rng, d);
  const MoebiusMap f = random_moebius_avoiding(rng, d);
  const Point fx = f(x).finite(), fy = f(y).finite();
  const double t = ttau(d, x, y).value;
  const double scale = d.kind() == DomainKind::HalfSpace ? std::max({euclid_dist(x, y), x[1], y[1]}) : 1.0;
  const double ft = image_ttau(d, f, fx, fy, o.image_samples, 0.5 * (x[0] + y[0]), scale);
  auto in = [&] { return d.describe() + " x=" + fmt(x) + " y=" + fmt(y) + " f=" + f.to_json(); };
  rec.le("ttau/2 <= ttau o f", 0.5 * t, ft, in, 1e-9);
  rec.le("ttau o f <= 2 ttau", ft, 2.0 * t, in, 1e-9);
}

void suite_absratio_invariance(Recorder& rec, std::mt19937_64& rng, std::size_t trial, const SuiteOptions& o) {
  const std::size_t n = o.dim + trial % 2;
  const MoebiusMap f = random_moebius(rng, n);
  std::vector<ExtendedPoint> q;
  const std::size_t inf_at = rng() % 10;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k == inf_at) {
      q.push_back(ExtendedPoint::infinity());
      continue;
    }
    Point p = Point::zero(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = uniform(rng, -3.0, 3.0);
    q.push_back(p);
  }
  const double r0 = absolute_ratio(q[0], q[1], q[2], q[3]);
  const double r1 = absolute_ratio(f.apply(q[0]), f.apply(q[1]), f.apply(q[2]), f.apply(q[3]));
  rec.near("|f(a),f(b),f(c),f(d)| = |a,b,c,d|", r1, r0, 1e-9 * r0, [&] {
    return "a=" + fmt(q[0]) + " b=" + fmt(q[1]) + " c=" + fmt(q[2]) + " d=" + fmt(q[3]) + " f=" + f.to_json();
  });
}

void suite_tau_moebius_invariance(Recorder& rec, std::mt19937_64& rng, std::size_t, const SuiteOptions& o) {
  const Domain d = random_convex_polygon(rng);
  const Point x = sample_in(rng, d), y = sample_in(rng, d);
  const MoebiusMap f = random_moebius_avoiding(rng, d);
  const Point fx = f(x).finite(), fy = f(y).finite();
  const std::size_t budget = std::max<std::size_t>(o.tau_budget, 256);
  const double t0 = tau(d, x, y, budget).value;
  const auto param = push_through(boundary_param(d), f);
  const double t1 = std::log1p(sup_pair_product(param, fx, fy, budget).value);
  rec.near("tau_f(D)(f(x),f(y)) = tau_D(x,y)", t1, t0, 1e-3,
           [&] { return d.describe() + " x=" + fmt(x) + " y=" + fmt(y) + " f=" + f.to_json(); });
}

void suite_ttau_metric(Recorder& rec, std::mt19937_64& rng, std::size_t trial, const SuiteOptions& o) {
  const Domain d = cycle_domain(trial, o.dim, rng, true);
  const Point x = sample_in(rng, d), y = sample_in(rng, d), z = sample_in(rng, d);
  auto in = [&] { return d.describe() + " x=" + fmt(x) + " y=" + fmt(y) + " z=" + fmt(z); };
  const double xy = ttau(d, x, y).value, yx = ttau(d, y, x).value;
  const double yz = ttau(d, y, z).value, xz = ttau(d, x, z).value;
  rec.near("ttau(x,y) = ttau(y,x)", xy, yx, 0.0, in);
  rec.le("ttau(x,z) <= ttau(x,y) + ttau(y,z)", xz, xy + yz, in);
}

void suite_similarity_invariance(Recorder& rec, std::mt19937_64& rng, std::size_t trial, const SuiteOptions&) {
  const bool poly = trial % 2 == 0;
  const Domain d = poly ? random_convex_polygon(rng) : Domain::ball(2);
  const Point x = sample_in(rng, d), y = sample_in(rng, d);
  const double lambda = poly ? std::pow(10.0, uniform(rng, -1.0, 1.0)) : 1.0;
  const auto q = random_orthogonal(rng, 2);
  const Point b = poly ? Point{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)} : Point::zero(2);
  auto map = [&](const Point& p) {
    return Point{lambda * (q[0] * p[0] + q[1] * p[1]) + b[0], lambda * (q[2] * p[0] + q[3] * p[1]) + b[1]};
  };
  const Domain d2 = poly ? d.similarity(lambda, q, b) : d;
  const Point x2 = map(x), y2 = map(y);
  if (!d2.contains(x2) || !d2.contains(y2)) return;
  // Rounding the mapped inputs moves ttau by about eps * scale / d(x, ∂D).
  const double scale = std::max({x.norm(), y.norm(), (x2.norm() + y2.norm() + b.norm()) / lambda, 1.0});
  const double cond = scale * (1.0 / dist_to_boundary(d, x) + 1.0 / dist_to_boundary(d, y));
  const double tol = 1e-12 + 16.0 * std::numeric_limits<double>::epsilon() * cond;
  rec.near("ttau(lQx+b, lQy+b) = ttau(x,y)", ttau(d2, x2, y2).value, ttau(d, x, y).value, tol,
           [&] { return d.describe() + " x=" + fmt(x) + " y=" + fmt(y); });
}

void suite_oval_geometry(Recorder& rec, std::mt19937_64& rng, std::size_t trial, const SuiteOptions&) {
  constexpr std::size_t m = 720;
  const Point f1{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
  const Point f2{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
  const double a = 0.5 * euclid_dist(f1, f2);
  const double b = a * std::pow(10.0, uniform(rng, -0.5, 0.5));
  const CassinianOval c(f1, f2, b);
  auto in = [&] { return "f1=" + fmt(f1) + " f2=" + fmt(f2) + " b=" + std::to_string(b); };

  const auto tr = oval_trace(c, m);
  const Point mid = c.center();
  const Point u = (f2 - f1) / (2.0 * a);
  double rmax = 0.0;
  std::map<int, std::vector<std::pair<double, double>>> by_branch;
  for (const auto& tp : tr) {
    const Point rel = tp.p - mid;
    const double r = rel.norm();
    rmax = std::max(rmax, r);
    rec.near("|z-f1||z-f2| = b^2", euclid_dist(tp.p, f1) * euclid_dist(tp.p, f2), b * b, 1e-9 * b * b, in);
    const double p1 = rel.dot(u);
    if (p1 > 0.0) by_branch[tp.branch].push_back({p1, r});
  }
  rec.near("max radius = sqrt(a^2+b^2)", rmax, oval_max_radius(c), 1e-9, in);
  for (auto& [branch, pts] : by_branch) {
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i)
      rec.le("radius nondecreasing in p1", pts[i - 1].second, pts[i].second, in, 1e-12 * (a + b));
  }

  // Maximal oval of a random domain stays in its closure.
  const Domain d = cycle_domain(trial, 2, rng, true);
  const Point x = sample_in(rng, d), y = sample_in(rng, d);
  if (x == y) return;
  const auto mo = maximal_oval(d, x, y);
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& tp : oval_trace(mo.oval, m)) worst = std::min(worst, d.signed_distance(tp.p));
  rec.le("maximal oval inside closure(D)", -1e-7, worst, pair_inputs(d, x, y), 0.0);
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> r{
      {"ball-sandwich", suite_ball_sandwich},
      {"halfspace-sandwich", suite_halfspace_sandwich},
      {"j-sandwich", suite_j_sandwich},
      {"tau-sandwich", suite_tau_sandwich},
      {"bounds-sandwich", suite_bounds_sandwich},
      {"rotation-ordering", suite_rotation_ordering},
      {"moebius-distortion", suite_moebius_distortion},
      {"absratio-invariance", suite_absratio_invariance},
      {"tau-moebius-invariance", suite_tau_moebius_invariance},
      {"ttau-metric", suite_ttau_metric},
      {"similarity-invariance", suite_similarity_invariance},
      {"oval-geometry", suite_oval_geometry},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, s] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed, const SuiteOptions& options) {
  if (trials == 0) fail(ErrorCode::InvalidArgument, "trials must be at least 1");
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
  if (it == reg.end()) fail(ErrorCode::InvalidArgument, "unknown suite: " + name);
  if (options.dim < 2) fail(ErrorCode::InvalidArgument, "dimension must be at least 2");

  SuiteReport report;
  report.suite = name;
  report.trials = trials;
  report.seed = seed;
  Recorder rec(report);
  for (std::size_t i = 0; i < trials; ++i) {
    rec.set_trial(i);
    auto rng = trial_rng(seed, i);
    it->second(rec, rng, i, options);
  }
  rec.finish();
  return report;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["trials"] = trials;
  j["seed"] = seed;
  j["checks"] = checks;
  j["passed"] = passed();
  j["violation_count"] = violation_count;
  j["max_slack_violation"] = max_slack_violation;
  j["min_slack"] = min_slack;
  auto& v = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& x : violations)
    v.push_back({{"trial", x.trial}, {"relation", x.relation}, {"inputs", x.inputs},
                 {"lhs", x.lhs}, {"rhs", x.rhs}, {"slack", x.slack}});
  return j.dump();
}

// ---------------------------------------------------------------------------
// Sharpness probes

namespace {

struct SequenceInfo {
  SequenceId id;
  const char* name;
  const char* camel;
  double target;
  double tolerance;
  double default_t;
};

const std::vector<SequenceInfo>& sequences() {
  static const std::vector<SequenceInfo> s{
      {SequenceId::BallLower, "ball-lower", "BallLower", 0.25, 0.005, 1.0 - 1e-6},
      {SequenceId::BallUpper, "ball-upper", "BallUpper", 1.0, 0.01, 1.0 - 1e-3},
      {SequenceId::BallAdditive, "ball-additive", "BallAdditive", std::log(1.25), 1e-3, 1e-4},
      {SequenceId::HalfLower, "half-lower", "HalfLower", 0.25, 0.005, 1e8},
      {SequenceId::HalfUpper, "half-upper", "HalfUpper", 1.0, 0.01, 1.0 + 1e-6},
      {SequenceId::HalfAdditive, "half-additive", "HalfAdditive", std::log(1.25), 1e-12, 2.0},
      {SequenceId::MoebLower, "moeb-lower", "MoebLower", 0.5, 0.001, 1e6},
      {SequenceId::MoebUpper, "moeb-upper", "MoebUpper", 2.0, 0.06, 1e6},
  };
  return s;
}

const SequenceInfo& info(SequenceId id) {
  for (const auto& s : sequences())
    if (s.id == id) return s;
  fail(ErrorCode::InvalidArgument, "unknown sequence");
}

void require_range(bool ok, SequenceId id, const char* range) {
  if (!ok) fail(ErrorCode::InvalidArgument, std::string(to_string(id)) + " needs t " + range);
}

}  // namespace

const char* to_string(SequenceId id) { return info(id).name; }

SequenceId parse_sequence(const std::string& s) {
  std::string key;
  for (char c : s)
    if (c != '-' && c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (const auto& q : sequences()) {
    std::string k;
    for (const char* c = q.camel; *c; ++c) k.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(*c))));
    if (k == key) return q.id;
  }
  fail(ErrorCode::InvalidArgument, "unknown sequence: " + s);
}

const std::vector<SequenceId>& all_sequences() {
  static const std::vector<SequenceId> v = [] {
    std::vector<SequenceId> out;
    for (const auto& s : sequences()) out.push_back(s.id);
    return out;
  }();
  return v;
}

double default_parameter(SequenceId id) { return info(id).default_t; }

std::vector<double> ladder(SequenceId id) {
  switch (id) {
    case SequenceId::BallLower:
    case SequenceId::BallUpper: return {1.0 - 1e-2, 1.0 - 1e-4, 1.0 - 1e-6};
    case SequenceId::BallAdditive: return {1e-2, 1e-4, 1e-6};
    case SequenceId::HalfUpper: return {1.0 + 1e-2, 1.0 + 1e-4, 1.0 + 1e-6};
    case SequenceId::HalfAdditive: return {2.0};
    case SequenceId::HalfLower:
    case SequenceId::MoebLower:
    case SequenceId::MoebUpper: return {1e3, 1e6, 1e9, 1e12};
  }
  return {};
}

bool SharpnessProbe::within() const {
  if (id == SequenceId::MoebUpper) return observed >= target - tolerance && observed <= target + 1e-9;
  return std::abs(observed - target) <= tolerance;
}

std::string SharpnessProbe::to_json() const {
  nlohmann::ordered_json j;
  j["sequence"] = to_string(id);
  j["t"] = t;
  j["observed"] = observed;
  j["target"] = target;
  j["tolerance"] = tolerance;
  j["within"] = within();
  return j.dump();
}

SharpnessProbe sharpness_probe(SequenceId id, double t) {
  const auto& si = info(id);
  if (!std::isfinite(t)) fail(ErrorCode::InvalidArgument, "parameter must be finite");
  double obs = 0.0;
  switch (id) {
    case SequenceId::BallLower:
      // x = -y = t e1
      require_range(t > 0.0 && t < 1.0, id, "in (0,1)");
      obs = std::log1p(2.0 * t / std::sqrt((1.0 - t) * (1.0 + t))) / (2.0 * (std::log1p(t) - std::log1p(-t)));
      break;
    case SequenceId::BallUpper: {
      // x = t e1, y = (t + (1-t)^2) e1
      require_range(t > 0.0 && t < 1.0, id, "in (0,1)");
      const double u = 1.0 - t;
      obs = std::log1p(u / std::sqrt(t)) / std::log1p(2.0 * u / (t * (1.0 + t)));
      break;
    }
    case SequenceId::BallAdditive: {
      // x = (t + (1-t)^2) e1, y = (t + (1-t)^5) e1, with u = 1 - t
      require_range(t > 0.0 && t < 1.0, id, "in (0,1)");
      const double u = 1.0 - t;
      const double x = t + u * u, y = t + std::pow(u, 5);
      const double k = u * (1.0 + u + u * u) / std::sqrt((1.0 + u) * (1.0 + u * u));
      const double r = std::log((1.0 + x) * (1.0 + u) * (1.0 + u * u) / (1.0 + y));
      obs = std::log1p(k) - 0.5 * r;
      break;
    }
    case SequenceId::HalfLower:
      // x = t e1 + e_n, y = e_n
      require_range(t > 2.0, id, "> 2");
      obs = std::log1p(std::sqrt(t)) / (2.0 * std::asinh(0.5 * t));
      break;
    case SequenceId::HalfUpper:
      // x = t e_n, y = e_n / t
      require_range(t > 1.0, id, "> 1");
      obs = std::log1p((t - 1.0) * (t + 1.0) / t) / (2.0 * std::log1p(t - 1.0));
      break;
    case SequenceId::HalfAdditive: {
      const Domain h = Domain::halfspace(2);
      const Point x{0.0, 2.0}, y{0.0, 0.5};
      obs = ttau(h, x, y).value - 0.5 * rho(h, x, y).value;
      break;
    }
    case SequenceId::MoebLower:
      // x = t e_n, y = e_n / t; f(x) = -y' with |f(x)| = (t-1)/(t+1)
      require_range(t > 1.0, id, "> 1");
      obs = std::log1p((t - 1.0) / std::sqrt(t)) / std::log1p((t - 1.0) * (t + 1.0) / t);
      break;
    case SequenceId::MoebUpper: {
      // x = t e1 + e_n, y = e_n; f(y) = 0, |f(x)| = t / sqrt(t^2 + 4)
      require_range(t > 2.0, id, "> 2");
      const double w = std::sqrt(t * t + 4.0);
      const double fx = t / w;
      const double one_minus = 4.0 / (w * (w + t));
      obs = std::log1p(fx / std::sqrt(one_minus)) / std::log1p(std::sqrt(t));
      break;
    }
  }
  return {id, t, obs, si.target, si.tolerance};
}

double sharpness_probe_direct(SequenceId id, double t) {
  sharpness_probe(id, t);  // range check
  const Domain B = Domain::ball(2), H = Domain::halfspace(2);
  switch (id) {
    case SequenceId::BallLower: {
      const Point x{t, 0.0}, y{-t, 0.0};
      return ttau(B, x, y).value / rho(B, x, y).value;
    }
    case SequenceId::BallUpper: {
      const Point x{t, 0.0}, y{t + (1.0 - t) * (1.0 - t), 0.0};
      return ttau(B, x, y).value / rho(B, x, y).value;
    }
    case SequenceId::BallAdditive: {
      const Point x{t + std::pow(1.0 - t, 2), 0.0}, y{t + std::pow(1.0 - t, 5), 0.0};
      return ttau(B, x, y).value - 0.5 * rho(B, x, y).value;
    }
    case SequenceId::HalfLower: {
      const Point x{t, 1.0}, y{0.0, 1.0};
      return ttau(H, x, y).value / rho(H, x, y).value;
    }
    case SequenceId::HalfUpper: {
      const Point x{0.0, t}, y{0.0, 1.0 / t};
      return ttau(H, x, y).value / rho(H, x, y).value;
    }
    case SequenceId::HalfAdditive: {
      const Point x{0.0, 2.0}, y{0.0, 0.5};
      return ttau(H, x, y).value - 0.5 * rho(H, x, y).value;
    }
    case SequenceId::MoebLower:
    case SequenceId::MoebUpper: {
      const bool lower = id == SequenceId::MoebLower;
      const Point x = lower ? Point{0.0, t} : Point{t, 1.0};
      const Point y = lower ? Point{0.0, 1.0 / t} : Point{0.0, 1.0};
      const MoebiusMap f = canonical_h2b(2);
      return ttau(B, f(x).finite(), f(y).finite()).value / ttau(H, x, y).value;
    }
  }
  return 0.0;
}

}  // namespace hypmet
