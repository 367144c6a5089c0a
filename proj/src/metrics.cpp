#include "hypmet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypmet/solver.hpp"

namespace hypmet {

namespace {

constexpr double kTol = 1e-12;

bool nearly_equal(double a, double b) { return std::abs(a - b) <= kTol * std::max(std::abs(a), std::abs(b)); }

bool planar_ball(const Domain& d) { return d.kind() == DomainKind::UnitBall && d.dim() == 2; }
bool planar_half(const Domain& d) { return d.kind() == DomainKind::HalfSpace && d.dim() == 2; }

bool collinear_with_origin(const Point& x, const Point& y) {
  const double nx = x.norm(), ny = y.norm();
  if (nx == 0.0 || ny == 0.0) return true;
  // |x|^2|y|^2 - (x.y)^2 = |x ^ y|^2, computed without cancellation in 2-D.
  double wedge2 = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = i + 1; j < x.dim(); ++j) {
      const double w = x[i] * y[j] - x[j] * y[i];
      wedge2 += w * w;
    }
  return std::sqrt(wedge2) <= kTol * nx * ny;
}

bool vertical_pair(const Point& x, const Point& y) {
  const double sep = euclid_dist(x, y);
  double horiz2 = 0.0;
  for (std::size_t i = 0; i + 1 < x.dim(); ++i) horiz2 += (x[i] - y[i]) * (x[i] - y[i]);
  return std::sqrt(horiz2) <= kTol * sep;
}

// Metric values are computed with the arguments in a fixed order so that
// symmetry holds bit for bit.
bool swapped(const Point& x, const Point& y) { return lex_less(y, x, 0.0); }

double ttau_from_product(const Point& x, const Point& y, double product) {
  return std::log1p(euclid_dist(x, y) / std::sqrt(product));
}

struct Reduced {
  Domain plane;
  PlaneFrame frame;
  Point x, y;
};

// B^n and H^n pairs moved into the 2-D section that carries the problem.
std::optional<Reduced> reduce(const Domain& d, const Point& x, const Point& y) {
  if (d.dim() == 2) return std::nullopt;
  if (d.kind() == DomainKind::UnitBall) {
    auto f = ball_frame(x, y);
    Point x2 = f.to_plane(x), y2 = f.to_plane(y);
    return Reduced{Domain::ball(2), std::move(f), std::move(x2), std::move(y2)};
  }
  if (d.kind() == DomainKind::HalfSpace) {
    auto f = halfspace_frame(x, y);
    Point x2 = f.to_plane(x), y2 = f.to_plane(y);
    return Reduced{Domain::halfspace(2), std::move(f), std::move(x2), std::move(y2)};
  }
  return std::nullopt;
}

ExtendedPoint lift(const Reduced& r, const Domain& d, const ExtendedPoint& p) {
  if (p.is_infinite()) return p;
  Point q = r.frame.from_plane(p.finite());
  if (d.kind() == DomainKind::UnitBall) return q / q.norm();
  q[q.dim() - 1] = 0.0;
  return q;
}

double halfplane_scale(const Point& x, const Point& y) {
  return std::max({euclid_dist(x, y), x.height(), y.height()});
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed";
    case Method::Numeric: return "numeric";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

const char* to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::None: return "none";
    case SpecialCase::EqualNorm: return "equal-norm";
    case SpecialCase::Collinear: return "collinear";
    case SpecialCase::EqualHeight: return "equal-height";
    case SpecialCase::Vertical: return "vertical";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// ρ

MetricValue rho(const Domain& d, const Point& x, const Point& y) {
  if (swapped(x, y)) return rho(d, y, x);
  d.require_inside(x);
  d.require_inside(y);
  const double sep = euclid_dist(x, y);
  switch (d.kind()) {
    case DomainKind::UnitBall: {
      const double nx = x.norm(), ny = y.norm();
      const double den = std::sqrt((1.0 - nx) * (1.0 + nx) * (1.0 - ny) * (1.0 + ny));
      return {2.0 * std::asinh(sep / den), Method::ClosedForm, {}};
    }
    case DomainKind::HalfSpace:
      // arcosh(1 + s^2/(2ab)) = 2 arsinh(s / (2 sqrt(ab)))
      return {2.0 * std::asinh(sep / (2.0 * std::sqrt(x.height() * y.height()))), Method::ClosedForm, {}};
    default:
      fail(ErrorCode::Unsupported, "rho is defined for the unit ball and the half-space only");
  }
}

double rho_axis(AxisKind kind, double r, double s) {
  if (kind == AxisKind::Ball) {
    if (!(-1.0 < r && r <= s && s < 1.0)) fail(ErrorCode::InvalidArgument, "rho_axis needs -1 < r <= s < 1");
    return (std::log1p(s) - std::log1p(-s)) - (std::log1p(r) - std::log1p(-r));
  }
  if (!(0.0 < r && r <= s)) fail(ErrorCode::InvalidArgument, "rho_axis needs 0 < r <= s");
  return std::log(s / r);
}

MetricValue rho_sup_absratio(const Domain& d, const Point& x, const Point& y, std::size_t budget) {
  if (d.kind() != DomainKind::UnitBall && d.kind() != DomainKind::HalfSpace)
    fail(ErrorCode::Unsupported, "rho is defined for the unit ball and the half-space only");
  d.require_inside(x);
  d.require_inside(y);
  if (x == y) return {0.0, Method::Numeric, {}};
  if (auto r = reduce(d, x, y)) {
    auto v = rho_sup_absratio(r->plane, r->x, r->y, budget);
    for (auto& w : v.witnesses) w = lift(*r, d, w);
    return v;
  }
  const double c = 0.5 * (x[0] + y[0]);
  const auto param = boundary_param(d, c, d.kind() == DomainKind::HalfSpace ? halfplane_scale(x, y) : 1.0);
  auto kernel = [&](const ExtendedPoint& u, const ExtendedPoint& v) -> double {
    if (u == v) return 1.0;
    if (u.is_infinite()) return euclid_dist(x, v.finite()) / euclid_dist(y, v.finite());
    if (v.is_infinite()) return euclid_dist(u.finite(), y) / euclid_dist(u.finite(), x);
    const Point& uu = u.finite();
    const Point& vv = v.finite();
    return euclid_dist(uu, y) * euclid_dist(x, vv) / (euclid_dist(uu, x) * euclid_dist(y, vv));
  };
  // The kernel is not symmetric in (u, v); maximize_pair scans unordered
  // pairs, so take the better orientation of each.
  auto sym = [&](const ExtendedPoint& u, const ExtendedPoint& v) { return std::max(kernel(u, v), kernel(v, u)); };
  auto best = maximize_pair(param, sym, budget);
  if (kernel(best.p, best.q) < kernel(best.q, best.p)) std::swap(best.p, best.q);
  return {std::log(best.value), Method::Numeric, {best.p, best.q}};
}

// ---------------------------------------------------------------------------
// j

MetricValue j_metric(const Domain& d, const Point& x, const Point& y) {
  if (swapped(x, y)) return j_metric(d, y, x);
  const double dx = dist_to_boundary(d, x);
  const double dy = dist_to_boundary(d, y);
  return {std::log1p(euclid_dist(x, y) / std::min(dx, dy)), Method::ClosedForm, {}};
}

// ---------------------------------------------------------------------------
// τ̃ closed forms

double ttau_ball_equal_norm(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const double nx = x.norm(), ny = y.norm();
  if (!nearly_equal(nx, ny) || nx == 0.0) fail(ErrorCode::InvalidArgument, "ttau_ball_equal_norm needs 0 < |x| = |y|");
  if (!(nx < 1.0)) fail(ErrorCode::OutsideDomain, "points must lie in the unit ball");
  const double r = 0.5 * (nx + ny);
  const double r2 = r * r;
  const double sep = euclid_dist(x, y);
  const double sum = (x + y).norm();
  auto case1 = [&] { return std::log1p(std::sqrt(2.0 * r * sep / ((1.0 - r) * (1.0 + r)))); };
  auto case2 = [&] { return std::log1p(sep / std::sqrt(1.0 + r2 - sum)); };
  const double threshold = 4.0 * r2 / (1.0 + r2);
  if (std::abs(sum - threshold) <= kTol * threshold) {
    const double a = case1(), b = case2();
    if (std::abs(a - b) > 1e-9) throw std::logic_error("equal-norm branches disagree at the case boundary");
    return a;
  }
  return sum <= threshold ? case1() : case2();
}

double ttau_ball_collinear(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (!collinear_with_origin(x, y)) fail(ErrorCode::InvalidArgument, "ttau_ball_collinear needs x = t y");
  const bool swap = x.norm() > y.norm();
  const Point& a = swap ? y : x;
  const Point& b = swap ? x : y;
  const double na = a.norm(), nb = b.norm();
  if (!(nb < 1.0)) fail(ErrorCode::OutsideDomain, "points must lie in the unit ball");
  const double sep = euclid_dist(a, b);
  const bool same_side = a.dot(b) >= 0.0;
  const double den = same_side ? (1.0 - na) * (1.0 - nb) : (1.0 + na) * (1.0 - nb);
  return std::log1p(sep / std::sqrt(den));
}

double ttau_halfplane_equal_height(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (!nearly_equal(x.height(), y.height()))
    fail(ErrorCode::InvalidArgument, "ttau_halfplane_equal_height needs equal heights");
  const double d = 0.5 * (x.height() + y.height());
  if (!(d > 0.0)) fail(ErrorCode::OutsideDomain, "points must lie in the upper half-space");
  const double sep = euclid_dist(x, y);
  if (sep > 2.0 * d) return std::log1p(std::sqrt(sep / d));
  return std::log1p(2.0 * sep / std::sqrt(4.0 * d * d + sep * sep));
}

double ttau_halfplane_vertical(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (!(x.height() > 0.0) || !(y.height() > 0.0))
    fail(ErrorCode::OutsideDomain, "points must lie in the upper half-space");
  if (x == y) return 0.0;
  if (!vertical_pair(x, y)) fail(ErrorCode::InvalidArgument, "ttau_halfplane_vertical needs a vertical pair");
  return std::log1p(euclid_dist(x, y) / std::sqrt(x.height() * y.height()));
}

SpecialCase special_case(const Domain& d, const Point& x, const Point& y) {
  if (planar_ball(d)) {
    if (x.norm() > 0.0 && nearly_equal(x.norm(), y.norm())) return SpecialCase::EqualNorm;
    if (collinear_with_origin(x, y)) return SpecialCase::Collinear;
  } else if (planar_half(d)) {
    if (nearly_equal(x.height(), y.height())) return SpecialCase::EqualHeight;
    if (vertical_pair(x, y)) return SpecialCase::Vertical;
  }
  return SpecialCase::None;
}

// ---------------------------------------------------------------------------
// τ̃

MetricValue ttau(const Domain& d, const Point& x, const Point& y, Strategy strategy, std::size_t oracle_samples) {
  if (swapped(x, y)) return ttau(d, y, x, strategy, oracle_samples);
  d.require_inside(x);
  d.require_inside(y);
  if (x == y) return {0.0, strategy == Strategy::Oracle ? Method::Oracle : Method::ClosedForm, {}};

  if (strategy == Strategy::Oracle) {
    auto e = oracle_min_product(d, x, y, oracle_samples);
    return {ttau_from_product(x, y, e.value), Method::Oracle, {e.argmin}};
  }

  if (auto r = reduce(d, x, y)) {
    auto v = ttau(r->plane, r->x, r->y, strategy, oracle_samples);
    for (auto& w : v.witnesses) w = lift(*r, d, w);
    return v;
  }

  if (strategy != Strategy::Numeric) {
    const SpecialCase sc = special_case(d, x, y);
    if (sc != SpecialCase::None) {
      // The closed-form value with the solver's witness; the solver takes
      // its own exact branch for these configurations.
      double v = 0.0;
      switch (sc) {
        case SpecialCase::EqualNorm: v = ttau_ball_equal_norm(x, y); break;
        case SpecialCase::Collinear: v = ttau_ball_collinear(x, y); break;
        case SpecialCase::EqualHeight: v = ttau_halfplane_equal_height(x, y); break;
        case SpecialCase::Vertical: v = ttau_halfplane_vertical(x, y); break;
        case SpecialCase::None: break;
      }
      if (sc == SpecialCase::Collinear) {
        // The nearest boundary point on the side of the outer point.
        const Point& outer = x.norm() >= y.norm() ? x : y;
        return {v, Method::ClosedForm, {outer / outer.norm()}};
      }
      return {v, Method::ClosedForm, {boundary_inf_product(d, x, y).argmin}};
    }
    if (strategy == Strategy::ClosedForm)
      fail(ErrorCode::Unsupported, "no closed form applies to this configuration");
  }

  BoundaryExtremum e = [&] {
    if (strategy == Strategy::Numeric && (planar_ball(d) || planar_half(d))) {
      const double scale = planar_half(d) ? halfplane_scale(x, y) : 1.0;
      return min_product_param(boundary_param(d, 0.5 * (x[0] + y[0]), scale), x, y, 4096);
    }
    return boundary_inf_product(d, x, y);
  }();
  return {ttau_from_product(x, y, e.value), Method::Numeric, {e.argmin}};
}

// ---------------------------------------------------------------------------
// Rotations and two-sided bounds

RotatedPairs extremal_rotations(const Point& x, const Point& y, Frame frame) {
  if (x.dim() != 2 || y.dim() != 2) fail(ErrorCode::DimensionMismatch, "extremal_rotations is planar");
  const Point m = (x + y) * 0.5;
  const double half = 0.5 * euclid_dist(x, y);
  Point xi = Point::unit(2, 0), zeta = Point::unit(2, 1);
  if (frame == Frame::Ball) {
    const double s = (x + y).norm();
    if (s > 0.0) xi = (x + y) / s;
    zeta = Point{-xi[1], xi[0]};
    return {m - xi * half, m + xi * half, m - zeta * half, m + zeta * half};
  }
  // Half-plane: x', y' vertical (along e_2), x'', y'' horizontal (along e_1).
  return {m - zeta * half, m + zeta * half, m - xi * half, m + xi * half};
}

Bounds ttau_bounds_ball(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (!(x.norm() < 1.0) || !(y.norm() < 1.0)) fail(ErrorCode::OutsideDomain, "points must lie in the unit ball");
  const double S = (x + y).norm();
  const double D = euclid_dist(x, y);
  Bounds b{0.0, std::nullopt};
  if (D > 0.0) {
    const double q = S * S + D * D;
    if (S * (1.0 + 4.0 / q) <= 4.0)
      b.lower = std::log1p(2.0 * std::sqrt(D * std::sqrt(q) / (4.0 - q)));
    else
      b.lower = std::log1p(2.0 * D / std::sqrt((2.0 - S) * (2.0 - S) + D * D));
  }
  if (S + D < 2.0) b.upper = std::log1p(2.0 * D / std::sqrt((2.0 - S - D) * (2.0 - S + D)));
  return b;
}

Bounds ttau_bounds_halfplane(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (!(x.height() > 0.0) || !(y.height() > 0.0))
    fail(ErrorCode::OutsideDomain, "points must lie in the upper half-space");
  const double d = 0.5 * (x.height() + y.height());
  const double D = euclid_dist(x, y);
  Bounds b{0.0, std::nullopt};
  if (D > 2.0 * d)
    b.lower = std::log1p(std::sqrt(D / d));
  else
    b.lower = std::log1p(2.0 * D / std::sqrt(4.0 * d * d + D * D));
  if (D < 2.0 * d) b.upper = std::log1p(2.0 * D / std::sqrt((2.0 * d - D) * (2.0 * d + D)));
  return b;
}

// ---------------------------------------------------------------------------
// τ

MetricValue tau(const Domain& d, const Point& x, const Point& y, std::size_t budget) {
  if (swapped(x, y)) return tau(d, y, x, budget);
  d.require_inside(x);
  d.require_inside(y);
  if (x == y) return {0.0, Method::Numeric, {}};
  auto best = sup_pair_product(d, x, y, budget);

  // Sweep q against the τ̃ witness as a second start.
  if (d.kind() != DomainKind::BoundaryCloud) {
    const ExtendedPoint p = boundary_inf_product(d, x, y).argmin;
    const double scale = d.kind() == DomainKind::HalfSpace ? halfplane_scale(x, y) : 1.0;
    const auto param = boundary_param(d, 0.5 * (x[0] + y[0]), scale);
    auto neg = [&](double t) { return -pair_kernel(x, y, p, param.at(t)); };
    const std::size_t n = std::clamp<std::size_t>(budget, 64, 4096);
    const double h = param.period / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double c = h * static_cast<double>(i);
      if (neg(c) > std::min(neg(c - h), neg(c + h))) continue;
      const double t = golden_min(neg, c - h, c + h, 1e-14 * std::max(1.0, param.period));
      for (double s : {c, t}) {
        const double v = -neg(s);
        if (v > best.value) best = PairExtremum{v, p, param.at(s)};
      }
    }
  }
  return {std::log1p(best.value), Method::Numeric, {best.p, best.q}};
}

// ---------------------------------------------------------------------------
// Metrics of a Moebius image f(D), from the base domain

namespace {

void require_image_domain(const Domain& base, const MoebiusMap& f) {
  if (f.dim() != base.dim()) fail(ErrorCode::DimensionMismatch, "map and domain dimensions differ");
  const auto pole = f.pole();
  if (pole.is_finite() && base.contains(pole.finite()))
    fail(ErrorCode::OutsideDomain, "the map sends a point of the domain to infinity");
}

bool parametrizable(const Domain& d) { return d.dim() == 2 && d.kind() != DomainKind::BoundaryCloud; }

BoundaryParam image_param(const Domain& base, const MoebiusMap& f, const Point& x, const Point& y) {
  const double scale = base.kind() == DomainKind::HalfSpace ? halfplane_scale(x, y) : 1.0;
  return push_through(boundary_param(base, 0.5 * (x[0] + y[0]), scale), f);
}

}  // namespace

MetricValue rho_image(const Domain& base, const MoebiusMap& f, const Point& x, const Point& y) {
  require_image_domain(base, f);
  return rho(base, x, y);
}

MetricValue j_image(const Domain& base, const MoebiusMap& f, const Point& x, const Point& y,
                    std::size_t samples) {
  require_image_domain(base, f);
  base.require_inside(x);
  base.require_inside(y);
  const Point fx = f(x).finite(), fy = f(y).finite();
  if (fx == fy) return {0.0, Method::Numeric, {}};
  auto dist = [&](const Point& z) {
    if (parametrizable(base)) return std::sqrt(min_product_param(image_param(base, f, x, y), z, z, samples).value);
    const Domain img = image_cloud(base, f, samples);
    return dist_to_boundary(img, z);
  };
  return {std::log1p(euclid_dist(fx, fy) / std::min(dist(fx), dist(fy))), Method::Numeric, {}};
}

MetricValue ttau_image(const Domain& base, const MoebiusMap& f, const Point& x, const Point& y,
                       std::size_t samples) {
  require_image_domain(base, f);
  base.require_inside(x);
  base.require_inside(y);
  const Point fx = f(x).finite(), fy = f(y).finite();
  if (fx == fy) return {0.0, Method::Numeric, {}};
  if (!parametrizable(base)) {
    auto v = ttau(image_cloud(base, f, samples), fx, fy);
    v.method = Method::Numeric;
    return v;
  }
  const auto e = min_product_param(image_param(base, f, x, y), fx, fy, samples);
  return {ttau_from_product(fx, fy, e.value), Method::Numeric, {e.argmin}};
}

MetricValue tau_image(const Domain& base, const MoebiusMap& f, const Point& x, const Point& y,
                      std::size_t budget, std::size_t samples) {
  require_image_domain(base, f);
  base.require_inside(x);
  base.require_inside(y);
  const Point fx = f(x).finite(), fy = f(y).finite();
  if (fx == fy) return {0.0, Method::Numeric, {}};
  if (!parametrizable(base)) return tau(image_cloud(base, f, samples), fx, fy, budget);
  const auto best = sup_pair_product(image_param(base, f, x, y), fx, fy, budget);
  return {std::log1p(best.value), Method::Numeric, {best.p, best.q}};
}

}  // namespace hypmet
