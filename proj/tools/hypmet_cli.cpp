#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hypmet/hypmet.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2, kPrecondition = 3;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& msg) { throw Failure{kUsage, msg}; }

[[noreturn]] void check_status_with(hm_status s, const std::string& msg) {
  const int code = (s == HM_PARSE || s == HM_IO || s == HM_DIMENSION) ? kUsage : kPrecondition;
  throw Failure{code, msg};
}

void check(hm_status s) {
  if (s != HM_OK) check_status_with(s, hm_last_error());
}

struct DomainDel {
  void operator()(hm_domain* d) const { hm_domain_free(d); }
};
struct MapDel {
  void operator()(hm_map* f) const { hm_map_free(f); }
};
using DomainPtr = std::unique_ptr<hm_domain, DomainDel>;
using MapPtr = std::unique_ptr<hm_map, MapDel>;

std::string take(char* s) {
  std::string out(s ? s : "");
  hm_string_free(s);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const char* end = s.data() + s.size();
  const char* start = s.data();
  if (start != end && *start == '+') ++start;
  auto [p, ec] = std::from_chars(start, end, v);
  if (s.empty() || ec != std::errc() || p != end || !std::isfinite(v)) usage_error("not a finite number: '" + raw + "'");
  return v;
}

std::vector<double> parse_coords(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item));
  if (out.empty() || (!s.empty() && s.back() == ',')) usage_error("bad coordinate list: '" + s + "'");
  return out;
}

// Round to `digits` significant digits; the JSON writer then prints the
// shortest representation, which is the rounded decimal.
double round_sig(double v, int digits) {
  if (!std::isfinite(v) || v == 0.0 || digits >= 17) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

void round_json(json& j, int digits) {
  if (j.is_number_float()) {
    j = round_sig(j.get<double>(), digits);
  } else if (j.is_structured()) {
    for (auto& el : j) round_json(el, digits);
  }
}

std::string fmt(double v, int digits) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", std::clamp(digits, 1, 17), v);
  return buf;
}

void emit(json j, int digits) {
  round_json(j, digits);
  std::cout << j.dump() << "\n";
}

DomainPtr open_domain(const std::string& spec) {
  hm_domain* d = nullptr;
  check(hm_domain_from_spec(spec.c_str(), &d));
  return DomainPtr(d);
}

size_t domain_dim(const hm_domain* d) {
  size_t n = 0;
  check(hm_domain_dim(d, &n));
  return n;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("HYPMET_SEED"); s && *s) {
    std::uint64_t v = 0;
    const char* end = s + std::strlen(s);
    auto [p, ec] = std::from_chars(s, end, v);
    if (ec != std::errc() || p != end) usage_error(std::string("HYPMET_SEED is not an unsigned integer: ") + s);
    return v;
  }
  return 42;
}

json witness_json(const hm_result& r, size_t k) {
  if (r.witness_infinite[k]) return "inf";
  json w = json::array();
  for (size_t i = 0; i < r.dim; ++i) w.push_back(r.witness[k][i]);
  return w;
}

const char* method_name(hm_method m) {
  switch (m) {
    case HM_CLOSED: return "closed";
    case HM_NUMERIC: return "numeric";
    case HM_ORACLE: return "oracle";
    default: return "auto";
  }
}

// eval

struct EvalArgs {
  std::string metric, domain, x, y, method = "auto", map;
  size_t budget = 0, samples = 0;
};

int cmd_eval(const EvalArgs& a, int digits) {
  const std::map<std::string, hm_metric> metrics{
      {"rho", HM_RHO}, {"j", HM_J}, {"ttau", HM_TTAU}, {"tau", HM_TAU}, {"rho-absratio", HM_RHO_ABSRATIO}};
  const std::map<std::string, hm_method> methods{
      {"auto", HM_AUTO}, {"closed", HM_CLOSED}, {"numeric", HM_NUMERIC}, {"oracle", HM_ORACLE}};
  auto d = open_domain(a.domain);
  const auto x = parse_coords(a.x), y = parse_coords(a.y);
  const size_t n = domain_dim(d.get());
  if (x.size() != n || y.size() != n) usage_error("points must have " + std::to_string(n) + " coordinates");
  MapPtr f;
  if (!a.map.empty()) {
    hm_map* m = nullptr;
    check(hm_map_from_file(a.map.c_str(), n, &m));
    f.reset(m);
  }
  hm_eval_options opt{a.budget, a.samples};
  hm_result r{};
  check(hm_eval(d.get(), f.get(), metrics.at(a.metric), methods.at(a.method), x.data(), y.data(), n, &opt, &r));
  json out;
  out["metric"] = a.metric;
  out["domain"] = a.domain;
  if (f) out["map"] = a.map;
  out["value"] = r.value;
  out["method"] = method_name(r.method);
  if (r.n_witnesses > 0) {
    json w = json::array();
    for (size_t k = 0; k < r.n_witnesses; ++k) w.push_back(witness_json(r, k));
    out["extremal"] = w;
  }
  emit(out, digits);
  return kOk;
}

// oval

struct OvalArgs {
  std::string foci, domain, x, y, meta;
  std::optional<double> b;
  size_t samples = 720;
};

int cmd_oval(const OvalArgs& a, int digits) {
  std::vector<double> f1, f2;
  double b = 0.0;
  json meta;
  if (!a.foci.empty()) {
    if (!a.b) usage_error("--foci needs --b");
    if (!a.domain.empty()) usage_error("--foci and --domain are exclusive");
    const auto semi = a.foci.find(';');
    if (semi == std::string::npos) usage_error("--foci expects 'x1,y1;x2,y2'");
    f1 = parse_coords(a.foci.substr(0, semi));
    f2 = parse_coords(a.foci.substr(semi + 1));
    if (f1.size() != 2 || f2.size() != 2) usage_error("foci must be planar points");
    b = *a.b;
  } else if (!a.domain.empty()) {
    if (a.x.empty() || a.y.empty()) usage_error("--domain needs --x and --y");
    if (a.b) usage_error("--b applies to --foci only");
    auto d = open_domain(a.domain);
    f1 = parse_coords(a.x);
    f2 = parse_coords(a.y);
    const size_t n = domain_dim(d.get());
    if (f1.size() != n || f2.size() != n) usage_error("points must have " + std::to_string(n) + " coordinates");
    if (f1 == f2) throw Failure{kPrecondition, "degenerate foci: x = y"};
    std::vector<double> tangent(n);
    check(hm_maximal_oval(d.get(), f1.data(), f2.data(), n, &b, tangent.data()));
    meta["tangent"] = tangent;
    if (n != 2) {
      // Only the focal data of a spatial oval is reported.
      meta["b"] = b;
      meta["b_squared"] = b * b;
      std::cout << "theta,branch,x,y\n";
      json m2 = meta;
      round_json(m2, digits);
      if (a.meta.empty()) {
        std::cerr << m2.dump() << "\n";
      } else {
        std::ofstream(a.meta) << m2.dump(2) << "\n";
      }
      return kOk;
    }
  } else {
    usage_error("oval needs --foci/--b or --domain/--x/--y");
  }
  if (f1 == f2) throw Failure{kPrecondition, "degenerate foci: the two foci coincide"};
  if (a.samples < 4) usage_error("--samples must be at least 4");

  hm_oval_info info{};
  check(hm_oval_info_get(f1.data(), f2.data(), b, &info));
  size_t count = 0;
  check(hm_oval_trace(f1.data(), f2.data(), b, a.samples, nullptr, 0, &count));
  std::vector<double> rows(4 * count);
  check(hm_oval_trace(f1.data(), f2.data(), b, a.samples, rows.data(), count, &count));

  std::cout << "theta,branch,x,y\n";
  for (size_t i = 0; i < count; ++i) {
    std::cout << fmt(rows[4 * i], digits) << ',' << static_cast<int>(rows[4 * i + 1]) << ','
              << fmt(rows[4 * i + 2], digits) << ',' << fmt(rows[4 * i + 3], digits) << '\n';
  }
  json side;
  side["a"] = info.a;
  side["b"] = info.b;
  side["b_squared"] = info.b * info.b;
  side["e"] = info.e;
  side["class"] = info.shape;
  side["max_radius"] = info.max_radius;
  side["points"] = count;
  if (meta.contains("tangent")) side["tangent"] = meta["tangent"];
  round_json(side, digits);
  if (a.meta.empty()) {
    std::cerr << side.dump() << "\n";
  } else {
    std::ofstream out(a.meta);
    if (!out) usage_error("cannot write " + a.meta);
    out << side.dump(2) << "\n";
  }
  return kOk;
}

// compare

struct CompareArgs {
  std::string domain, pairs;
  size_t budget = 256;
  bool no_tau = false;
};

std::vector<std::vector<double>> read_pairs(const std::string& path, size_t n) {
  std::ifstream in(path);
  if (!in) usage_error("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    // A leading header row is allowed.
    if (rows.empty() && std::isalpha(static_cast<unsigned char>(t[0]))) continue;
    std::vector<double> v;
    try {
      v = parse_coords(t);
    } catch (const Failure& f) {
      usage_error(path + ":" + std::to_string(lineno) + ": " + f.message);
    }
    if (v.size() != 2 * n)
      usage_error(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(2 * n) + " values");
    rows.push_back(std::move(v));
  }
  return rows;
}

int cmd_compare(const CompareArgs& a, int digits) {
  auto d = open_domain(a.domain);
  const size_t n = domain_dim(d.get());
  const auto rows = read_pairs(a.pairs, n);
  const bool model = a.domain.rfind("ball:", 0) == 0 || a.domain.rfind("halfspace:", 0) == 0;
  const bool planar_model = model && n == 2;
  const bool half = a.domain.rfind("halfspace:", 0) == 0;
  const bool with_tau = !a.no_tau && n == 2;

  std::cout << "index,rho,j,ttau,tau,lower,upper,rho_sandwich,j_sandwich,bounds_sandwich,tau_sandwich\n";
  constexpr double slack = 1e-12;
  bool all_ok = true;
  for (size_t i = 0; i < rows.size(); ++i) {
    const double* x = rows[i].data();
    const double* y = rows[i].data() + n;
    hm_eval_options opt{a.budget, 0};
    auto value = [&](hm_metric m) {
      hm_result r{};
      check(hm_eval(d.get(), nullptr, m, HM_AUTO, x, y, n, &opt, &r));
      return r.value;
    };
    const double j = value(HM_J), tt = value(HM_TTAU);
    std::optional<double> rho, tau, lo, up;
    if (model) rho = value(HM_RHO);
    if (with_tau) tau = value(HM_TAU);
    if (planar_model) {
      double l = 0, u = 0;
      int has_u = 0;
      check(hm_bounds(half ? 1 : 0, x, y, &l, &u, &has_u));
      lo = l;
      if (has_u) up = u;
    }
    auto cell = [&](std::optional<double> v) { return v ? fmt(*v, digits) : std::string(); };
    auto flag = [&](std::optional<bool> b) -> std::string {
      if (!b) return "";
      if (!*b) all_ok = false;
      return *b ? "true" : "false";
    };
    std::optional<bool> s_rho, s_j, s_b, s_tau;
    if (rho) s_rho = 0.25 * *rho - tt <= slack && tt - *rho <= slack && tt - (0.5 * *rho + std::log(1.25)) <= slack;
    s_j = 0.5 * j - tt <= slack && tt - j <= slack && tt - (0.5 * j + 0.5 * std::log(3.0)) <= slack;
    if (rho) *s_j = *s_j && 0.5 * *rho - j <= slack && j - *rho <= slack;
    if (lo) s_b = *lo - tt <= slack && (!up || tt - *up <= slack);
    if (tau) s_tau = 0.5 * *tau - tt <= 1e-9 && tt - *tau <= 1e-9;
    std::cout << i << ',' << cell(rho) << ',' << fmt(j, digits) << ',' << fmt(tt, digits) << ',' << cell(tau) << ','
              << cell(lo) << ',' << cell(up) << ',' << flag(s_rho) << ',' << flag(s_j) << ',' << flag(s_b) << ','
              << flag(s_tau) << '\n';
  }
  return all_ok ? kOk : kVerifyFailed;
}

// verify

struct VerifyArgs {
  std::string suite;
  size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  size_t dim = 0, tau_budget = 0;
  std::optional<size_t> heavy_trials;
  unsigned jobs = 0;
};

bool is_heavy(const std::string& s) { return s == "tau-sandwich" || s == "tau-moebius-invariance"; }

int cmd_verify(const VerifyArgs& a, int digits) {
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  const json known = json::parse(take([] {
    char* s = nullptr;
    check(hm_suite_names(&s));
    return s;
  }()));
  std::vector<std::string> names;
  if (a.suite == "all") {
    for (const auto& s : known) names.push_back(s.get<std::string>());
  } else {
    if (std::find(known.begin(), known.end(), a.suite) == known.end()) usage_error("unknown suite: " + a.suite);
    names.push_back(a.suite);
  }
  if (a.trials == 0) usage_error("--trials must be positive");

  struct Outcome {
    std::string json;
    int passed = 0;
    hm_status status = HM_OK;
    std::string error;
  };
  std::vector<Outcome> outcomes(names.size());
  auto run = [&](size_t k) {
    const auto& name = names[k];
    size_t trials = a.trials;
    if (is_heavy(name) && a.suite == "all") trials = std::min(trials, a.heavy_trials.value_or(1000));
    if (is_heavy(name) && a.heavy_trials && a.suite != "all") trials = *a.heavy_trials;
    char* report = nullptr;
    outcomes[k].status = hm_run_suite(name.c_str(), trials, seed, a.dim, a.tau_budget, &report, &outcomes[k].passed);
    if (outcomes[k].status == HM_OK) {
      outcomes[k].json = take(report);
    } else {
      outcomes[k].error = hm_last_error();
    }
  };
  unsigned jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(names.size()));
  if (jobs <= 1) {
    for (size_t k = 0; k < names.size(); ++k) run(k);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (size_t k; (k = next.fetch_add(1)) < names.size();) run(k);
      });
    for (auto& t : pool) t.join();
  }
  bool ok = true;
  json reports = json::array();
  for (auto& o : outcomes) {
    if (o.status != HM_OK) check_status_with(o.status, o.error);
    ok = ok && o.passed;
    reports.push_back(json::parse(o.json));
  }
  if (names.size() == 1) {
    emit(reports[0], digits);
  } else {
    json out;
    out["seed"] = seed;
    out["passed"] = ok;
    out["reports"] = reports;
    emit(out, digits);
  }
  return ok ? kOk : kVerifyFailed;
}

// sharpness

struct SharpArgs {
  std::string sequence;
  std::optional<double> param;
  bool ladder = false;
};

int cmd_sharpness(const SharpArgs& a, int digits) {
  std::vector<std::string> seqs;
  if (a.sequence == "all") {
    for (const auto& s : json::parse(take([] {
           char* s = nullptr;
           check(hm_sequence_names(&s));
           return s;
         }())))
      seqs.push_back(s.get<std::string>());
    if (a.param) usage_error("--param needs a single --sequence");
  } else {
    seqs.push_back(a.sequence);
  }
  bool ok = true;
  json out = json::array();
  for (const auto& s : seqs) {
    char* text = nullptr;
    int good = 0;
    hm_status st = a.ladder ? hm_sharpness_ladder(s.c_str(), &text, &good)
                            : hm_sharpness_probe(s.c_str(), a.param.value_or(0.0), a.param ? 0 : 1, &text, &good);
    if (st == HM_INVALID_ARGUMENT && a.param) throw Failure{kPrecondition, hm_last_error()};
    if (st == HM_INVALID_ARGUMENT) usage_error(hm_last_error());
    check(st);
    json rec = json::parse(take(text));
    if (a.ladder) rec = json{{"sequence", s}, {"monotone", good != 0}, {"probes", rec}};
    ok = ok && good;
    out.push_back(rec);
  }
  emit(out.size() == 1 ? out[0] : out, digits);
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic-type metrics: evaluation, Cassinian ovals, verification"};
  app.require_subcommand(1);
  int precision = 10;
  app.add_option("--precision", precision, "Significant digits in numeric output (17 = full)")
      ->check(CLI::Range(1, 17));
  app.set_version_flag("--version", std::string(hm_version()));

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate one metric at a pair of points");
  eval->add_option("--metric", ea.metric, "rho, j, ttau, tau or rho-absratio")
      ->required()
      ->check(CLI::IsMember({"rho", "j", "ttau", "tau", "rho-absratio"}));
  eval->add_option("--domain", ea.domain, "ball:N, halfspace:N, polygon:FILE or cloud:FILE")->required();
  eval->add_option("--x", ea.x, "Comma-separated coordinates")->required();
  eval->add_option("--y", ea.y, "Comma-separated coordinates")->required();
  eval->add_option("--method", ea.method, "auto, closed, numeric or oracle")
      ->check(CLI::IsMember({"auto", "closed", "numeric", "oracle"}));
  eval->add_option("--map", ea.map, "Moebius chain JSON; the metric is taken in f(D) at f(x), f(y)");
  eval->add_option("--budget", ea.budget, "Pair grid for tau and rho-absratio")->check(CLI::Range(16, 1 << 16));
  eval->add_option("--samples", ea.samples, "Oracle or image-boundary samples")->check(CLI::Range(1000, 100'000'000));

  OvalArgs oa;
  auto* oval = app.add_subcommand("oval", "Trace a Cassinian oval or the maximal oval of a domain");
  oval->add_option("--foci", oa.foci, "\"x1,y1;x2,y2\"");
  oval->add_option("--b", oa.b, "Oval level b, |z-f1||z-f2| = b^2");
  oval->add_option("--domain", oa.domain, "Domain for the maximal oval");
  oval->add_option("--x", oa.x, "First focus");
  oval->add_option("--y", oa.y, "Second focus");
  oval->add_option("--samples", oa.samples, "Polar angles sampled")->check(CLI::Range(4, 10'000'000));
  oval->add_option("--meta", oa.meta, "Write the JSON sidecar here instead of stderr");

  CompareArgs ca;
  auto* compare = app.add_subcommand("compare", "Tabulate metrics and sandwich checks for a pairs file");
  compare->add_option("--domain", ca.domain)->required();
  compare->add_option("--pairs", ca.pairs, "CSV rows x1,...,xn,y1,...,yn")->required();
  compare->add_option("--budget", ca.budget, "Pair grid for tau")->check(CLI::Range(16, 1 << 16));
  compare->add_flag("--no-tau", ca.no_tau, "Skip the tau column");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run randomized inequality suites");
  verify->add_option("--suite", va.suite, "Suite name or all")->required();
  verify->add_option("--trials", va.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Defaults to HYPMET_SEED, else 42");
  verify->add_option("--dim", va.dim, "Dimension of ball and half-space trials")->check(CLI::Range(2, 8));
  verify->add_option("--tau-budget", va.tau_budget)->check(CLI::Range(16, 4096));
  verify->add_option("--heavy-trials", va.heavy_trials,
                     "Trials for the tau suites (with --suite all: default min(trials, 1000))");
  verify->add_option("--jobs", va.jobs, "Suites run in parallel");

  SharpArgs sa;
  auto* sharp = app.add_subcommand("sharpness", "Evaluate the extremal sequences");
  sharp->add_option("--sequence", sa.sequence, "e.g. ball-lower, moeb-upper, or all")->required();
  auto* param = sharp->add_option("--param", sa.param, "Sequence parameter t (default: the documented one)");
  sharp->add_flag("--ladder", sa.ladder, "Probe along the convergence ladder")->excludes(param);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(ea, precision);
    if (*oval) return cmd_oval(oa, precision);
    if (*compare) return cmd_compare(ca, precision);
    if (*verify) return cmd_verify(va, precision);
    if (*sharp) return cmd_sharpness(sa, precision);
  } catch (const Failure& f) {
    std::cerr << "hypmet: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "hypmet: " << e.what() << "\n";
    return kPrecondition;
  }
  return kUsage;
}
