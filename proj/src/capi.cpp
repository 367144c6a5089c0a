#include "hypmet/hypmet.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "hypmet/domain.hpp"
#include "hypmet/metrics.hpp"
#include "hypmet/moebius.hpp"
#include "hypmet/verify.hpp"
#include "json.hpp"

struct hm_domain {
  hypmet::Domain d;
};

struct hm_map {
  hypmet::MoebiusMap f;
};

namespace {

thread_local std::string last_error;

hm_status status_of(hypmet::ErrorCode c) {
  switch (c) {
    case hypmet::ErrorCode::InvalidArgument: return HM_INVALID_ARGUMENT;
    case hypmet::ErrorCode::DimensionMismatch: return HM_DIMENSION;
    case hypmet::ErrorCode::OutsideDomain: return HM_OUTSIDE_DOMAIN;
    case hypmet::ErrorCode::Unsupported: return HM_UNSUPPORTED;
    case hypmet::ErrorCode::Parse: return HM_PARSE;
    case hypmet::ErrorCode::Io: return HM_IO;
  }
  return HM_INTERNAL;
}

template <class F>
hm_status guarded(F&& body) {
  try {
    body();
    return HM_OK;
  } catch (const hypmet::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return HM_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) hypmet::fail(hypmet::ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

hypmet::Point point_of(const double* x, size_t n) {
  need(x, "point");
  return hypmet::Point(std::span<const double>(x, n));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) hypmet::fail(hypmet::ErrorCode::Io, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

size_t parse_dim(const std::string& s) {
  size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') hypmet::fail(hypmet::ErrorCode::Parse, "bad dimension: " + s);
  return v;
}

void fill_result(const hypmet::MetricValue& v, size_t n, hm_result* out) {
  out->value = v.value;
  switch (v.method) {
    case hypmet::Method::ClosedForm: out->method = HM_CLOSED; break;
    case hypmet::Method::Numeric: out->method = HM_NUMERIC; break;
    case hypmet::Method::Oracle: out->method = HM_ORACLE; break;
  }
  out->dim = n;
  out->n_witnesses = 0;
  if (n > HM_WITNESS_MAX_DIM) return;
  for (size_t k = 0; k < v.witnesses.size() && k < 2; ++k) {
    const auto& w = v.witnesses[k];
    out->witness_infinite[k] = w.is_infinite() ? 1 : 0;
    for (size_t i = 0; i < n; ++i) out->witness[k][i] = w.is_infinite() ? 0.0 : w.finite()[i];
    out->n_witnesses = k + 1;
  }
}

}  // namespace

extern "C" {

const char* hm_version(void) { return "0.1.0"; }

const char* hm_last_error(void) { return last_error.c_str(); }

void hm_string_free(char* s) { delete[] s; }

hm_status hm_domain_ball(size_t n, hm_domain** out) {
  return guarded([&] {
    need(out, "out");
    *out = new hm_domain{hypmet::Domain::ball(n)};
  });
}

hm_status hm_domain_halfspace(size_t n, hm_domain** out) {
  return guarded([&] {
    need(out, "out");
    *out = new hm_domain{hypmet::Domain::halfspace(n)};
  });
}

hm_status hm_domain_polygon(const double* xy, size_t n_vertices, hm_domain** out) {
  return guarded([&] {
    need(out, "out");
    need(xy, "vertices");
    std::vector<hypmet::Point> v;
    for (size_t i = 0; i < n_vertices; ++i) v.push_back(hypmet::Point{xy[2 * i], xy[2 * i + 1]});
    *out = new hm_domain{hypmet::Domain::polygon(std::move(v))};
  });
}

hm_status hm_domain_cloud(const double* pts, size_t n_points, size_t dim, hm_domain** out) {
  return guarded([&] {
    need(out, "out");
    need(pts, "points");
    std::vector<hypmet::Point> v;
    for (size_t i = 0; i < n_points; ++i) v.push_back(point_of(pts + i * dim, dim));
    *out = new hm_domain{hypmet::Domain::cloud(std::move(v))};
  });
}

hm_status hm_domain_from_spec(const char* spec, hm_domain** out) {
  return guarded([&] {
    need(out, "out");
    need(spec, "spec");
    const std::string s(spec);
    const auto colon = s.find(':');
    if (colon == std::string::npos) hypmet::fail(hypmet::ErrorCode::Parse, "domain spec needs KIND:ARG: " + s);
    const std::string kind = s.substr(0, colon), arg = s.substr(colon + 1);
    if (kind == "ball")
      *out = new hm_domain{hypmet::Domain::ball(parse_dim(arg))};
    else if (kind == "halfspace")
      *out = new hm_domain{hypmet::Domain::halfspace(parse_dim(arg))};
    else if (kind == "polygon")
      *out = new hm_domain{hypmet::Domain::polygon_from_json(read_file(arg))};
    else if (kind == "cloud")
      *out = new hm_domain{hypmet::Domain::cloud_from_json(read_file(arg))};
    else
      hypmet::fail(hypmet::ErrorCode::Parse, "unknown domain kind: " + kind);
  });
}

void hm_domain_free(hm_domain* d) { delete d; }

hm_status hm_domain_dim(const hm_domain* d, size_t* out) {
  return guarded([&] {
    need(d, "domain");
    need(out, "out");
    *out = d->d.dim();
  });
}

hm_status hm_domain_describe(const hm_domain* d, char** out) {
  return guarded([&] {
    need(d, "domain");
    need(out, "out");
    *out = dup(d->d.describe());
  });
}

hm_status hm_domain_signed_distance(const hm_domain* d, const double* x, size_t n, double* out) {
  return guarded([&] {
    need(d, "domain");
    need(out, "out");
    *out = d->d.signed_distance(point_of(x, n));
  });
}

hm_status hm_map_from_json(const char* text, size_t dim, hm_map** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new hm_map{hypmet::MoebiusMap::from_json(text, dim)};
  });
}

hm_status hm_map_from_file(const char* path, size_t dim, hm_map** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new hm_map{hypmet::MoebiusMap::from_json(read_file(path), dim)};
  });
}

hm_status hm_map_canonical_h2b(size_t n, hm_map** out) {
  return guarded([&] {
    need(out, "out");
    *out = new hm_map{hypmet::canonical_h2b(n)};
  });
}

void hm_map_free(hm_map* f) { delete f; }

hm_status hm_map_to_json(const hm_map* f, char** out) {
  return guarded([&] {
    need(f, "map");
    need(out, "out");
    *out = dup(f->f.to_json());
  });
}

hm_status hm_map_apply(const hm_map* f, const double* x, int x_infinite, size_t n, double* y, int* y_infinite) {
  return guarded([&] {
    need(f, "map");
    need(y, "y");
    need(y_infinite, "y_infinite");
    if (n != f->f.dim()) hypmet::fail(hypmet::ErrorCode::DimensionMismatch, "point and map dimensions differ");
    const hypmet::ExtendedPoint in = x_infinite ? hypmet::ExtendedPoint::infinity() : hypmet::ExtendedPoint(point_of(x, n));
    const auto img = f->f.apply(in);
    *y_infinite = img.is_infinite() ? 1 : 0;
    for (size_t i = 0; i < n; ++i) y[i] = img.is_infinite() ? 0.0 : img.finite()[i];
  });
}

hm_status hm_eval(const hm_domain* d, const hm_map* f, hm_metric metric, hm_method method, const double* x,
                  const double* y, size_t n, const hm_eval_options* options, hm_result* out) {
  return guarded([&] {
    need(d, "domain");
    need(out, "out");
    const hypmet::Point px = point_of(x, n), py = point_of(y, n);
    const size_t budget = options && options->budget ? options->budget : 512;
    const size_t samples = options && options->samples ? options->samples : 0;
    hypmet::MetricValue v{0.0, hypmet::Method::ClosedForm, {}};
    if (f) {
      if (method == HM_CLOSED || method == HM_ORACLE)
        hypmet::fail(hypmet::ErrorCode::Unsupported, "image domains are evaluated numerically");
      const size_t s = samples ? samples : 4096;
      switch (metric) {
        case HM_RHO: v = hypmet::rho_image(d->d, f->f, px, py); break;
        case HM_J: v = hypmet::j_image(d->d, f->f, px, py, s); break;
        case HM_TTAU: v = hypmet::ttau_image(d->d, f->f, px, py, s); break;
        case HM_TAU: v = hypmet::tau_image(d->d, f->f, px, py, budget, s); break;
        default: hypmet::fail(hypmet::ErrorCode::Unsupported, "metric not available for image domains");
      }
      const size_t fn = f->f.dim();
      fill_result(v, fn, out);
      return;
    }
    switch (metric) {
      case HM_RHO: v = hypmet::rho(d->d, px, py); break;
      case HM_J: v = hypmet::j_metric(d->d, px, py); break;
      case HM_TTAU: {
        hypmet::Strategy s = hypmet::Strategy::Auto;
        if (method == HM_CLOSED) s = hypmet::Strategy::ClosedForm;
        if (method == HM_NUMERIC) s = hypmet::Strategy::Numeric;
        if (method == HM_ORACLE) s = hypmet::Strategy::Oracle;
        v = hypmet::ttau(d->d, px, py, s, samples ? samples : 1'000'000);
        break;
      }
      case HM_TAU: v = hypmet::tau(d->d, px, py, budget); break;
      case HM_RHO_ABSRATIO: v = hypmet::rho_sup_absratio(d->d, px, py, budget); break;
      default: hypmet::fail(hypmet::ErrorCode::InvalidArgument, "unknown metric");
    }
    if (metric != HM_TTAU && method == HM_ORACLE)
      hypmet::fail(hypmet::ErrorCode::Unsupported, "the oracle applies to ttau only");
    if (method == HM_CLOSED && v.method != hypmet::Method::ClosedForm)
      hypmet::fail(hypmet::ErrorCode::Unsupported, "no closed form for this metric");
    fill_result(v, n, out);
  });
}

hm_status hm_bounds(int halfplane, const double* x, const double* y, double* lower, double* upper, int* has_upper) {
  return guarded([&] {
    need(lower, "lower");
    need(upper, "upper");
    need(has_upper, "has_upper");
    const hypmet::Point px = point_of(x, 2), py = point_of(y, 2);
    const auto b = halfplane ? hypmet::ttau_bounds_halfplane(px, py) : hypmet::ttau_bounds_ball(px, py);
    *lower = b.lower;
    *has_upper = b.upper ? 1 : 0;
    *upper = b.upper ? *b.upper : 0.0;
  });
}

hm_status hm_oval_info_get(const double* f1, const double* f2, double b, hm_oval_info* out) {
  return guarded([&] {
    need(out, "out");
    const hypmet::CassinianOval c(point_of(f1, 2), point_of(f2, 2), b);
    out->a = c.a();
    out->b = c.b();
    out->e = c.e();
    out->max_radius = hypmet::oval_max_radius(c);
    out->shape = hypmet::to_string(hypmet::oval_classify(c));
  });
}

hm_status hm_oval_trace(const double* f1, const double* f2, double b, size_t m, double* rows, size_t cap,
                        size_t* count) {
  return guarded([&] {
    need(count, "count");
    const hypmet::CassinianOval c(point_of(f1, 2), point_of(f2, 2), b);
    const auto tr = hypmet::oval_trace(c, m);
    *count = tr.size();
    if (!rows) return;
    for (size_t i = 0; i < tr.size() && i < cap; ++i) {
      rows[4 * i] = tr[i].theta;
      rows[4 * i + 1] = tr[i].branch;
      rows[4 * i + 2] = tr[i].p[0];
      rows[4 * i + 3] = tr[i].p[1];
    }
  });
}

hm_status hm_maximal_oval(const hm_domain* d, const double* x, const double* y, size_t n, double* b,
                          double* tangent) {
  return guarded([&] {
    need(d, "domain");
    need(b, "b");
    need(tangent, "tangent");
    const auto mo = hypmet::maximal_oval(d->d, point_of(x, n), point_of(y, n));
    *b = mo.oval.b();
    for (size_t i = 0; i < n; ++i) tangent[i] = mo.tangent[i];
  });
}

hm_status hm_suite_names(char** json) {
  return guarded([&] {
    need(json, "json");
    *json = dup(nlohmann::json(hypmet::suite_names()).dump());
  });
}

hm_status hm_run_suite(const char* name, size_t trials, uint64_t seed, size_t dim, size_t tau_budget,
                       char** report_json, int* passed) {
  return guarded([&] {
    need(name, "name");
    need(report_json, "report_json");
    need(passed, "passed");
    hypmet::SuiteOptions o;
    if (dim) o.dim = dim;
    if (tau_budget) o.tau_budget = tau_budget;
    const auto r = hypmet::run_suite(name, trials, seed, o);
    *report_json = dup(r.to_json());
    *passed = r.passed() ? 1 : 0;
  });
}

hm_status hm_sharpness_probe(const char* sequence, double t, int use_default, char** json, int* within) {
  return guarded([&] {
    need(sequence, "sequence");
    need(json, "json");
    need(within, "within");
    const auto id = hypmet::parse_sequence(sequence);
    const auto p = hypmet::sharpness_probe(id, use_default ? hypmet::default_parameter(id) : t);
    *json = dup(p.to_json());
    *within = p.within() ? 1 : 0;
  });
}

hm_status hm_sharpness_ladder(const char* sequence, char** json, int* ok) {
  return guarded([&] {
    need(sequence, "sequence");
    need(json, "json");
    need(ok, "ok");
    const auto id = hypmet::parse_sequence(sequence);
    auto arr = nlohmann::ordered_json::array();
    bool good = true;
    double prev = std::numeric_limits<double>::infinity();
    for (double t : hypmet::ladder(id)) {
      const auto p = hypmet::sharpness_probe(id, t);
      const double gap = std::abs(p.observed - p.target);
      if (gap > prev) good = false;
      if (id == hypmet::SequenceId::MoebUpper && p.observed > p.target + 1e-9) good = false;
      prev = gap;
      arr.push_back(nlohmann::ordered_json::parse(p.to_json()));
    }
    *json = dup(arr.dump());
    *ok = good ? 1 : 0;
  });
}

hm_status hm_sequence_names(char** json) {
  return guarded([&] {
    need(json, "json");
    std::vector<std::string> names;
    for (auto id : hypmet::all_sequences()) names.emplace_back(hypmet::to_string(id));
    *json = dup(nlohmann::json(names).dump());
  });
}

}  // extern "C"
