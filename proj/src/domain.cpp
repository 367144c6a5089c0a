#include "hypmet/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "hypmet/solver.hpp"
#include "json.hpp"

namespace hypmet {

namespace {

double cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double d1 = cross2(c, d, a), d2 = cross2(c, d, b);
  const double d3 = cross2(a, b, c), d4 = cross2(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

double point_segment_dist(const Point& p, const Point& a, const Point& b) {
  const Point d = b - a;
  const double len2 = d.norm2();
  double t = len2 > 0.0 ? (p - a).dot(d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return euclid_dist(p, a + d * t);
}

std::vector<Point> fibonacci_sphere(std::size_t count) {
  std::vector<Point> out;
  out.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    out.push_back(Point{r * std::cos(phi), r * std::sin(phi), z});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polygon2D

Polygon2D::Polygon2D(std::vector<Point> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 3) fail(ErrorCode::InvalidArgument, "polygon needs at least 3 vertices");
  for (const auto& p : v_)
    if (p.dim() != 2) fail(ErrorCode::DimensionMismatch, "polygon vertices must be planar");

  double area2 = 0.0;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const Point& a = v_[i];
    const Point& b = v_[(i + 1) % v_.size()];
    if (a == b) fail(ErrorCode::InvalidArgument, "polygon has repeated consecutive vertices");
    area2 += a[0] * b[1] - a[1] * b[0];
  }
  if (area2 == 0.0) fail(ErrorCode::InvalidArgument, "polygon is degenerate");
  if (area2 < 0.0) std::reverse(v_.begin(), v_.end());

  const std::size_t n = v_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const auto [a, b] = edge(i);
      const auto [c, d] = edge(j);
      if (adjacent) {
        // Adjacent edges share exactly one vertex; overlap means a fold-back.
        const Point& shared = (j == i + 1) ? b : a;
        const Point& far1 = (j == i + 1) ? a : b;
        const Point& far2 = (j == i + 1) ? d : c;
        if (cross2(shared, far1, far2) == 0.0 && (far1 - shared).dot(far2 - shared) > 0.0)
          fail(ErrorCode::InvalidArgument, "polygon is not simple");
        continue;
      }
      if (segments_touch(a, b, c, d)) fail(ErrorCode::InvalidArgument, "polygon is not simple");
    }
  }

  cum_.resize(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = edge(i);
    cum_[i + 1] = cum_[i] + euclid_dist(a, b);
  }
  perimeter_ = cum_[n];
}

Point Polygon2D::at_arclength(double s) const {
  s = std::fmod(s, perimeter_);
  if (s < 0.0) s += perimeter_;
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
  std::size_t i = static_cast<std::size_t>(std::distance(cum_.begin(), it)) - 1;
  if (i >= v_.size()) i = v_.size() - 1;
  const auto [a, b] = edge(i);
  const double len = cum_[i + 1] - cum_[i];
  const double t = len > 0.0 ? (s - cum_[i]) / len : 0.0;
  return a + (b - a) * t;
}

int Polygon2D::winding_number(const Point& x) const {
  int wn = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    const auto [a, b] = edge(i);
    if (a[1] <= x[1]) {
      if (b[1] > x[1] && cross2(a, b, x) > 0) ++wn;
    } else {
      if (b[1] <= x[1] && cross2(a, b, x) < 0) --wn;
    }
  }
  return wn;
}

BoundaryCloud::BoundaryCloud(std::vector<Point> samples) : s_(std::move(samples)) {
  if (s_.empty()) fail(ErrorCode::InvalidArgument, "boundary cloud must be nonempty");
  for (const auto& p : s_) require_same_dim(p, s_.front());
}

// ---------------------------------------------------------------------------
// Domain

Domain Domain::ball(std::size_t n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dimension must be at least 2");
  return Domain(UnitBall{n});
}

Domain Domain::halfspace(std::size_t n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "dimension must be at least 2");
  return Domain(HalfSpace{n});
}

Domain Domain::polygon(std::vector<Point> vertices) { return Domain(Polygon2D(std::move(vertices))); }

Domain Domain::cloud(std::vector<Point> samples) { return Domain(BoundaryCloud(std::move(samples))); }

namespace {

std::vector<Point> parse_point_list(const std::string& text, const char* key) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("domain JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains(key) || !j[key].is_array())
    fail(ErrorCode::Parse, std::string("domain JSON needs a \"") + key + "\" list");
  std::vector<Point> pts;
  try {
    for (const auto& row : j[key]) pts.emplace_back(row.get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("domain JSON: ") + e.what());
  }
  return pts;
}

}  // namespace

Domain Domain::polygon_from_json(const std::string& text) {
  return polygon(parse_point_list(text, "vertices"));
}

Domain Domain::cloud_from_json(const std::string& text) { return cloud(parse_point_list(text, "points")); }

std::size_t Domain::dim() const {
  switch (kind()) {
    case DomainKind::UnitBall: return std::get<UnitBall>(v_).dim;
    case DomainKind::HalfSpace: return std::get<HalfSpace>(v_).dim;
    case DomainKind::Polygon2D: return 2;
    case DomainKind::BoundaryCloud: return std::get<BoundaryCloud>(v_).dim();
  }
  return 0;
}

std::string Domain::describe() const {
  std::ostringstream os;
  switch (kind()) {
    case DomainKind::UnitBall: os << "ball:" << dim(); break;
    case DomainKind::HalfSpace: os << "halfspace:" << dim(); break;
    case DomainKind::Polygon2D: os << "polygon(" << std::get<Polygon2D>(v_).size() << ")"; break;
    case DomainKind::BoundaryCloud:
      os << "cloud(" << std::get<BoundaryCloud>(v_).samples().size() << ")";
      break;
  }
  return os.str();
}

double Domain::signed_distance(const Point& x) const {
  if (x.dim() != dim()) fail(ErrorCode::DimensionMismatch, "point dimension does not match domain");
  switch (kind()) {
    case DomainKind::UnitBall: return 1.0 - x.norm();
    case DomainKind::HalfSpace: return x.height();
    case DomainKind::Polygon2D: {
      const auto& poly = std::get<Polygon2D>(v_);
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto [a, b] = poly.edge(i);
        best = std::min(best, point_segment_dist(x, a, b));
      }
      return poly.winding_number(x) != 0 ? best : -best;
    }
    case DomainKind::BoundaryCloud: {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& s : std::get<BoundaryCloud>(v_).samples()) best = std::min(best, euclid_dist(x, s));
      return best;
    }
  }
  return 0.0;
}

bool Domain::contains(const Point& x) const { return signed_distance(x) > 0.0; }

void Domain::require_inside(const Point& x) const {
  if (!contains(x)) fail(ErrorCode::OutsideDomain, "point " + x.str() + " is not in " + describe());
}

Domain Domain::similarity(double lambda, const std::vector<double>& q, const Point& b) const {
  const std::size_t n = dim();
  if (!q.empty() && q.size() != n * n) fail(ErrorCode::DimensionMismatch, "similarity matrix size");
  auto map = [&](const Point& p) {
    Point r = Point::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += (q.empty() ? (i == k ? 1.0 : 0.0) : q[i * n + k]) * p[k];
      r[i] = lambda * s;
    }
    return r + b;
  };
  std::vector<Point> pts;
  switch (kind()) {
    case DomainKind::Polygon2D:
      for (const auto& v : std::get<Polygon2D>(v_).vertices()) pts.push_back(map(v));
      return polygon(std::move(pts));
    case DomainKind::BoundaryCloud:
      for (const auto& s : std::get<BoundaryCloud>(v_).samples()) pts.push_back(map(s));
      return cloud(std::move(pts));
    default:
      fail(ErrorCode::Unsupported, "similarity images are only represented for polygons and clouds");
  }
}

double dist_to_boundary(const Domain& d, const Point& x) {
  d.require_inside(x);
  return d.signed_distance(x);
}

// ---------------------------------------------------------------------------
// Boundary parametrizations and sampling

BoundaryParam boundary_param(const Domain& d, double center, double scale) {
  if (d.dim() != 2 && d.kind() != DomainKind::Polygon2D)
    fail(ErrorCode::Unsupported, "boundary parametrization needs a planar domain");
  switch (d.kind()) {
    case DomainKind::UnitBall:
      return {2.0 * std::numbers::pi,
              [](double t) -> ExtendedPoint { return Point{std::cos(t), std::sin(t)}; }};
    case DomainKind::HalfSpace: {
      if (!(scale > 0.0)) scale = 1.0;
      return {std::numbers::pi, [center, scale](double t) -> ExtendedPoint {
                t = std::fmod(t, std::numbers::pi);
                if (t < 0.0) t += std::numbers::pi;
                const double s = std::sin(t);
                if (s == 0.0) return ExtendedPoint::infinity();
                return Point{center - scale * std::cos(t) / s, 0.0};
              }};
    }
    case DomainKind::Polygon2D: {
      const auto poly = std::get<Polygon2D>(d.variant());
      return {poly.perimeter(), [poly](double s) -> ExtendedPoint { return poly.at_arclength(s); }};
    }
    case DomainKind::BoundaryCloud: break;
  }
  fail(ErrorCode::Unsupported, "boundary clouds have no parametrization");
}

BoundaryParam push_through(BoundaryParam param, MoebiusMap f) {
  auto inner = std::move(param.at);
  return {param.period, [inner = std::move(inner), f = std::move(f)](double t) { return f.apply(inner(t)); }};
}

std::vector<Point> densify(const Domain& d, std::size_t count, double extent) {
  if (count == 0) fail(ErrorCode::InvalidArgument, "sample count must be positive");
  const std::size_t n = d.dim();
  std::vector<Point> out;
  switch (d.kind()) {
    case DomainKind::UnitBall:
      if (n == 2) {
        for (std::size_t i = 0; i < count; ++i) {
          const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count);
          out.push_back(Point{std::cos(t), std::sin(t)});
        }
      } else if (n == 3) {
        out = fibonacci_sphere(count);
      } else {
        fail(ErrorCode::Unsupported, "sphere sampling is implemented for n = 2, 3");
      }
      return out;
    case DomainKind::HalfSpace: {
      if (!(extent > 0.0)) extent = 10.0;
      if (n == 2) {
        for (std::size_t i = 0; i < count; ++i) {
          const double t = count == 1 ? 0.0
                                      : -extent + 2.0 * extent * static_cast<double>(i) /
                                                      static_cast<double>(count - 1);
          out.push_back(Point{t, 0.0});
        }
      } else if (n == 3) {
        const auto side = static_cast<std::size_t>(std::max(2.0, std::floor(std::sqrt(double(count)))));
        for (std::size_t i = 0; i < side; ++i)
          for (std::size_t j = 0; j < side; ++j) {
            const double s = -extent + 2.0 * extent * static_cast<double>(i) / static_cast<double>(side - 1);
            const double t = -extent + 2.0 * extent * static_cast<double>(j) / static_cast<double>(side - 1);
            out.push_back(Point{s, t, 0.0});
          }
      } else {
        fail(ErrorCode::Unsupported, "hyperplane sampling is implemented for n = 2, 3");
      }
      return out;
    }
    case DomainKind::Polygon2D: {
      const auto& poly = std::get<Polygon2D>(d.variant());
      for (std::size_t i = 0; i < count; ++i)
        out.push_back(poly.at_arclength(poly.perimeter() * static_cast<double>(i) / static_cast<double>(count)));
      return out;
    }
    case DomainKind::BoundaryCloud: return std::get<BoundaryCloud>(d.variant()).samples();
  }
  return out;
}

Domain image_cloud(const Domain& d, const MoebiusMap& f, std::size_t count, double extent) {
  if (f.dim() != d.dim()) fail(ErrorCode::DimensionMismatch, "map and domain dimensions differ");
  std::vector<Point> pts;
  for (const auto& p : densify(d, count, extent)) {
    auto img = f(p);
    if (img.is_finite()) pts.push_back(img.finite());
  }
  if (d.kind() == DomainKind::HalfSpace) {
    auto inf_img = f.apply(ExtendedPoint::infinity());
    if (inf_img.is_finite()) pts.push_back(inf_img.finite());
  }
  return Domain::cloud(std::move(pts));
}

BoundaryExtremum boundary_inf_product(const Domain& d, const Point& x, const Point& y) {
  d.require_inside(x);
  d.require_inside(y);
  switch (d.kind()) {
    case DomainKind::UnitBall:
      return d.dim() == 2 ? min_product_circle(x, y) : min_product_sphere(x, y);
    case DomainKind::HalfSpace:
      return d.dim() == 2 ? min_product_line(x, y) : min_product_hyperplane(x, y);
    case DomainKind::Polygon2D: {
      const auto& poly = std::get<Polygon2D>(d.variant());
      std::optional<BoundaryExtremum> best;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto [a, b] = poly.edge(i);
        auto e = min_product_segment(x, y, a, b);
        if (!best || improves(e.value, e.argmin, best->value, best->argmin)) best = std::move(e);
      }
      return *best;
    }
    case DomainKind::BoundaryCloud: {
      const auto& s = std::get<BoundaryCloud>(d.variant()).samples();
      std::optional<BoundaryExtremum> best;
      for (const auto& p : s) {
        const double v = euclid_dist(x, p) * euclid_dist(y, p);
        if (!best || improves(v, p, best->value, best->argmin)) best = BoundaryExtremum{v, p, true};
      }
      return *best;
    }
  }
  fail(ErrorCode::Unsupported, "unknown domain");
}

// ---------------------------------------------------------------------------
// Cassinian ovals

CassinianOval::CassinianOval(Point focus1, Point focus2, double b)
    : f1_(std::move(focus1)), f2_(std::move(focus2)), b_(b) {
  require_same_dim(f1_, f2_);
  if (!(b_ > 0.0) || !std::isfinite(b_)) fail(ErrorCode::InvalidArgument, "oval level b must be positive");
}

double CassinianOval::a() const { return 0.5 * euclid_dist(f1_, f2_); }

double CassinianOval::e() const {
  const double a_ = a();
  return a_ > 0.0 ? b_ / a_ : std::numeric_limits<double>::infinity();
}

const char* to_string(OvalShape s) {
  switch (s) {
    case OvalShape::TwoLoops: return "TwoLoops";
    case OvalShape::Lemniscate: return "Lemniscate";
    case OvalShape::Peanut: return "Peanut";
    case OvalShape::Convex: return "Convex";
    case OvalShape::Circle: return "Circle";
  }
  return "?";
}

OvalShape oval_classify(const CassinianOval& c) {
  if (c.a() == 0.0) return OvalShape::Circle;
  const double e = c.e();
  if (std::abs(e - 1.0) <= 1e-12) return OvalShape::Lemniscate;
  if (e < 1.0) return OvalShape::TwoLoops;
  if (e < std::numbers::sqrt2) return OvalShape::Peanut;
  return OvalShape::Convex;
}

double oval_max_radius(const CassinianOval& c) { return std::hypot(c.a(), c.b()); }

std::vector<OvalTracePoint> oval_trace(const CassinianOval& c, std::size_t m) {
  if (m < 8) fail(ErrorCode::InvalidArgument, "oval trace needs at least 8 samples");
  if (c.focus1().dim() != 2) fail(ErrorCode::Unsupported, "oval tracing is planar only");

  const double a = c.a();
  const double a2 = a * a;
  const double b2 = c.b() * c.b();
  const Point mid = c.center();
  Point u = Point::unit(2, 0);
  if (a > 0.0) u = (c.focus2() - c.focus1()) / (2.0 * a);
  const Point v{-u[1], u[0]};

  std::vector<OvalTracePoint> out;
  out.reserve(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    const double s2 = std::abs(std::sin(2.0 * theta));
    const double disc = (b2 - a2 * s2) * (b2 + a2 * s2);
    if (disc < 0.0) continue;
    const double root = std::sqrt(disc);
    const double base = a2 * std::cos(2.0 * theta);
    for (int branch : {+1, -1}) {
      const double r2 = base + branch * root;
      if (!(r2 > 0.0)) continue;
      const double r = std::sqrt(r2);
      out.push_back({theta, branch, mid + u * (r * std::cos(theta)) + v * (r * std::sin(theta))});
    }
  }
  return out;
}

MaximalOval maximal_oval(const Domain& d, const Point& x, const Point& y) {
  if (x == y) fail(ErrorCode::InvalidArgument, "maximal oval needs distinct foci");
  auto e = boundary_inf_product(d, x, y);
  return {CassinianOval(x, y, std::sqrt(e.value)), e.argmin};
}

}  // namespace hypmet
