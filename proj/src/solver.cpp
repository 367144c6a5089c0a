#include "hypmet/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace hypmet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieTol = 1e-12;
constexpr double kSameTol = 1e-12;
constexpr std::size_t kCircleGrid = 1024;
constexpr double kGoldenTol = 1e-14;

bool nearly_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

void require_planar(const Point& x, const Point& y) {
  if (x.dim() != 2 || y.dim() != 2) fail(ErrorCode::DimensionMismatch, "planar points expected");
}

// A(t) = c2 t^2 + c1 t + c0
struct Quadratic {
  double c2, c1, c0;
};

// Minimizes q(t) = A(t) B(t) on [lo, hi]. q is evaluated through `q` rather
// than through the expanded coefficients to avoid cancellation; the
// coefficients only locate the stationary points of q'.
std::pair<double, double> minimize_quartic(const std::function<double(double)>& q,
                                           const std::function<double(double)>& dq, Quadratic A,
                                           Quadratic B, double lo, double hi) {
  // q'' = 12 a2 b2 t^2 + 6 (a2 b1 + a1 b2) t + 2 (a2 b0 + b2 a0 + a1 b1)
  const double k2 = 12.0 * A.c2 * B.c2;
  const double k1 = 6.0 * (A.c2 * B.c1 + A.c1 * B.c2);
  const double k0 = 2.0 * (A.c2 * B.c0 + B.c2 * A.c0 + A.c1 * B.c1);

  std::vector<double> cuts{lo};
  if (k2 != 0.0) {
    const double disc = k1 * k1 - 4.0 * k2 * k0;
    if (disc > 0.0) {
      const double sq = std::sqrt(disc);
      const double r1 = (-k1 - std::copysign(sq, k1)) / (2.0 * k2);
      const double r2 = r1 != 0.0 ? k0 / (k2 * r1) : -k1 / k2;
      for (double r : {r1, r2})
        if (r > lo && r < hi) cuts.push_back(r);
    }
  } else if (k1 != 0.0) {
    const double r = -k0 / k1;
    if (r > lo && r < hi) cuts.push_back(r);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());

  double best_t = lo;
  double best_q = q(lo);
  auto consider = [&](double t) {
    const double v = q(t);
    if (v < best_q) {
      best_q = v;
      best_t = t;
    }
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    consider(b);
    if (dq(a) < 0.0 && dq(b) > 0.0) {
      const double width = kGoldenTol * std::max({1.0, std::abs(a), std::abs(b)});
      consider(golden_min(q, a, b, width));
    }
  }
  return {best_t, best_q};
}

Point perpendicular(const Point& u) { return Point{-u[1], u[0]}; }

}  // namespace

double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  double best_x = fc <= fd ? c : d;
  double best_f = std::min(fc, fd);
  for (int it = 0; it < 400 && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
      if (fc < best_f) best_f = fc, best_x = c;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
      if (fd < best_f) best_f = fd, best_x = d;
    }
  }
  return best_x;
}

bool improves(double value, const Point& argmin, double best_value, const Point& best_argmin) {
  const double scale = std::max(std::abs(value), std::abs(best_value));
  if (std::abs(value - best_value) <= kTieTol * scale) return lex_less(argmin, best_argmin);
  return value < best_value;
}

// ---------------------------------------------------------------------------
// Circle

BoundaryExtremum min_product_circle(const Point& x, const Point& y) {
  require_planar(x, y);
  if (!(x.norm() < 1.0) || !(y.norm() < 1.0))
    fail(ErrorCode::OutsideDomain, "min_product_circle needs points in the unit disk");

  const double nx = x.norm(), ny = y.norm();
  if (nearly_equal(nx, ny, kSameTol)) {
    if (nx == 0.0 && ny == 0.0) return {1.0, Point{-1.0, 0.0}, true};
    // Symmetric frame: x = x1 ξ + x2 η, y = x1 ξ - x2 η.
    const Point s = x + y;
    const Point dv = x - y;
    const double x1 = 0.5 * s.norm();
    const double x2 = 0.5 * dv.norm();
    const double r2 = x1 * x1 + x2 * x2;
    Point eta = x2 > 0.0 ? dv / (2.0 * x2) : perpendicular(s / (2.0 * x1));
    Point xi = x1 > 0.0 ? s / (2.0 * x1) : Point{eta[1], -eta[0]};
    const double t0 = 0.5 * x1 * (1.0 + 1.0 / r2);
    double t, value;
    if (t0 <= 1.0) {
      t = t0;
      value = x2 * (1.0 - r2) / std::sqrt(r2);
    } else {
      t = 1.0;
      value = r2 + 1.0 - 2.0 * x1;
    }
    const double sv = std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)));
    Point p1 = xi * t + eta * sv;
    Point p2 = xi * t - eta * sv;
    return {value, lex_less(p2, p1) ? p2 : p1, true};
  }

  const double ax = x.norm2() + 1.0, ay = y.norm2() + 1.0;
  const double h = 2.0 * std::numbers::pi / static_cast<double>(kCircleGrid);
  static const auto table = [h] {
    std::array<std::array<double, 2>, kCircleGrid> t{};
    for (std::size_t i = 0; i < kCircleGrid; ++i)
      t[i] = {std::cos(h * static_cast<double>(i)), std::sin(h * static_cast<double>(i))};
    return t;
  }();
  std::array<double, kCircleGrid> vals{};
  for (std::size_t i = 0; i < kCircleGrid; ++i) {
    const auto [c, s] = table[i];
    vals[i] = (ax - 2.0 * (x[0] * c + x[1] * s)) * (ay - 2.0 * (y[0] * c + y[1] * s));
  }

  // The expanded form above cancels badly near the circle; refine on the
  // distances themselves.
  auto g = [&](double th) {
    const double c = std::cos(th), s = std::sin(th);
    return std::hypot(x[0] - c, x[1] - s) * std::hypot(y[0] - c, y[1] - s);
  };
  std::optional<BoundaryExtremum> best;
  for (std::size_t i = 0; i < kCircleGrid; ++i) {
    const double prev = vals[(i + kCircleGrid - 1) % kCircleGrid];
    const double next = vals[(i + 1) % kCircleGrid];
    if (!(vals[i] <= prev && vals[i] <= next)) continue;
    const double c = h * static_cast<double>(i);
    const double th = golden_min(g, c - h, c + h, kGoldenTol);
    const double v = g(th);
    Point p{std::cos(th), std::sin(th)};
    if (!best || improves(v, p, best->value, best->argmin)) best = BoundaryExtremum{v, std::move(p), true};
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Line / hyperplane

BoundaryExtremum min_product_line(const Point& x, const Point& y) {
  require_planar(x, y);
  if (!(x[1] > 0.0) || !(y[1] > 0.0))
    fail(ErrorCode::OutsideDomain, "min_product_line needs points in the upper half-plane");

  const double c = 0.5 * (x[0] + y[0]);
  const double delta = 0.5 * (y[0] - x[0]);
  const double sep = euclid_dist(x, y);

  if (nearly_equal(x[1], y[1], kSameTol)) {
    const double d = 0.5 * (x[1] + y[1]);
    const double h = std::abs(delta);
    if (h > d) {
      const double t0 = std::sqrt((h - d) * (h + d));
      return {2.0 * h * d, Point{c - t0, 0.0}, true};
    }
    return {h * h + d * d, Point{c, 0.0}, true};
  }
  if (std::abs(x[0] - y[0]) <= kSameTol * sep) return {x[1] * y[1], Point{c, 0.0}, true};

  // Centered coordinate u = t - c: A(u) = (u + δ)^2 + hx^2, B(u) = (u - δ)^2 + hy^2.
  const double hx2 = x[1] * x[1], hy2 = y[1] * y[1];
  auto A = [&](double u) { return (u + delta) * (u + delta) + hx2; };
  auto B = [&](double u) { return (u - delta) * (u - delta) + hy2; };
  auto q = [&](double u) { return A(u) * B(u); };
  auto dq = [&](double u) { return 2.0 * (u + delta) * B(u) + 2.0 * (u - delta) * A(u); };
  const double span = std::abs(delta);
  const auto [u, qv] = minimize_quartic(q, dq, {1.0, 2.0 * delta, delta * delta + hx2},
                                        {1.0, -2.0 * delta, delta * delta + hy2}, -span, span);
  return {std::sqrt(qv), Point{c + u, 0.0}, true};
}

BoundaryExtremum min_product_segment(const Point& x, const Point& y, const Point& a, const Point& b) {
  require_same_dim(x, y);
  require_same_dim(x, a);
  require_same_dim(a, b);
  if (a == b) return {euclid_dist(x, a) * euclid_dist(y, a), a, true};

  const Point d = b - a;
  const Point xa = x - a, ya = y - a;
  const double dd = d.norm2();
  const Quadratic A{dd, -2.0 * d.dot(xa), xa.norm2()};
  const Quadratic B{dd, -2.0 * d.dot(ya), ya.norm2()};
  auto at = [&](double t) { return a + d * t; };
  auto q = [&](double t) {
    const Point p = at(t);
    const double g = euclid_dist(x, p) * euclid_dist(y, p);
    return g * g;
  };
  auto dq = [&](double t) {
    const double av = (A.c2 * t + A.c1) * t + A.c0;
    const double bv = (B.c2 * t + B.c1) * t + B.c0;
    return (2.0 * A.c2 * t + A.c1) * bv + av * (2.0 * B.c2 * t + B.c1);
  };
  const auto [t, qv] = minimize_quartic(q, dq, A, B, 0.0, 1.0);
  return {std::sqrt(qv), at(t), true};
}

// ---------------------------------------------------------------------------
// Plane reductions

Point PlaneFrame::to_plane(const Point& p) const {
  const Point r = p - origin;
  return Point{r.dot(u), r.dot(v)};
}

Point PlaneFrame::from_plane(const Point& p2) const { return origin + u * p2[0] + v * p2[1]; }

namespace {

Point any_orthogonal(const Point& u) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < u.dim(); ++i)
    if (std::abs(u[i]) < std::abs(u[k])) k = i;
  Point e = Point::unit(u.dim(), k);
  Point v = e - u * e.dot(u);
  return v / v.norm();
}

}  // namespace

PlaneFrame ball_frame(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const std::size_t n = x.dim();
  Point u = Point::unit(n, 0);
  if (x.norm() > 0.0)
    u = x / x.norm();
  else if (y.norm() > 0.0)
    u = y / y.norm();
  Point v = y - u * y.dot(u);
  if (v.norm() <= 1e-12 * std::max(y.norm(), 1e-300)) {
    v = any_orthogonal(u);
  } else {
    v = v / v.norm();
    v = v - u * v.dot(u);
    v = v / v.norm();
  }
  return {Point::zero(n), std::move(u), std::move(v)};
}

PlaneFrame halfspace_frame(const Point& x, const Point& y) {
  require_same_dim(x, y);
  const std::size_t n = x.dim();
  Point origin = x;
  origin[n - 1] = 0.0;
  Point w = y - x;
  w[n - 1] = 0.0;
  Point u = Point::unit(n, 0);
  if (w.norm() > 0.0) u = w / w.norm();
  return {std::move(origin), std::move(u), Point::unit(n, n - 1)};
}

BoundaryExtremum min_product_sphere(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (x.dim() == 2) return min_product_circle(x, y);
  if (!(x.norm() < 1.0) || !(y.norm() < 1.0))
    fail(ErrorCode::OutsideDomain, "min_product_sphere needs points in the unit ball");
  const PlaneFrame f = ball_frame(x, y);
  auto e = min_product_circle(f.to_plane(x), f.to_plane(y));
  Point p = f.from_plane(e.argmin);
  return {e.value, p / p.norm(), true};
}

BoundaryExtremum min_product_hyperplane(const Point& x, const Point& y) {
  require_same_dim(x, y);
  if (x.dim() == 2) return min_product_line(x, y);
  if (!(x.height() > 0.0) || !(y.height() > 0.0))
    fail(ErrorCode::OutsideDomain, "min_product_hyperplane needs points in the upper half-space");
  const PlaneFrame f = halfspace_frame(x, y);
  auto e = min_product_line(f.to_plane(x), f.to_plane(y));
  Point p = f.from_plane(e.argmin);
  p[p.dim() - 1] = 0.0;
  return {e.value, std::move(p), true};
}

// ---------------------------------------------------------------------------
// Parametrized boundaries

BoundaryExtremum min_product_param(const BoundaryParam& param, const Point& x, const Point& y,
                                   std::size_t samples) {
  if (samples < 8) fail(ErrorCode::InvalidArgument, "min_product_param needs at least 8 samples");
  auto g = [&](double t) {
    const auto p = param.at(t);
    if (p.is_infinite()) return kInf;
    return euclid_dist(x, p.finite()) * euclid_dist(y, p.finite());
  };
  const double h = param.period / static_cast<double>(samples);
  std::vector<double> vals(samples);
  for (std::size_t i = 0; i < samples; ++i) vals[i] = g(h * static_cast<double>(i));

  std::optional<BoundaryExtremum> best;
  const double tol = kGoldenTol * std::max(1.0, param.period);
  for (std::size_t i = 0; i < samples; ++i) {
    const double prev = vals[(i + samples - 1) % samples];
    const double next = vals[(i + 1) % samples];
    if (!(vals[i] <= prev && vals[i] <= next) || !std::isfinite(vals[i])) continue;
    const double c = h * static_cast<double>(i);
    double t = golden_min(g, c - h, c + h, tol);
    double v = g(t);
    if (!(v <= vals[i])) {
      t = c;
      v = vals[i];
    }
    const auto p = param.at(t);
    if (!best || improves(v, p.finite(), best->value, best->argmin))
      best = BoundaryExtremum{v, p.finite(), true};
  }
  if (!best) fail(ErrorCode::InvalidArgument, "boundary has no finite sample");
  return *best;
}

// ---------------------------------------------------------------------------
// Pair suprema

double pair_kernel(const Point& x, const Point& y, const ExtendedPoint& p, const ExtendedPoint& q) {
  if (p == q) return 0.0;
  const double xy = euclid_dist(x, y);
  if (q.is_infinite()) {
    const Point& pp = p.finite();
    return xy / std::sqrt(euclid_dist(x, pp) * euclid_dist(y, pp));
  }
  if (p.is_infinite()) {
    const Point& qq = q.finite();
    return xy / std::sqrt(euclid_dist(x, qq) * euclid_dist(y, qq));
  }
  const Point& pp = p.finite();
  const Point& qq = q.finite();
  return xy * euclid_dist(pp, qq) /
         std::sqrt(euclid_dist(x, pp) * euclid_dist(y, qq) * euclid_dist(x, qq) * euclid_dist(y, pp));
}

PairExtremum maximize_pair(const BoundaryParam& param, const PairKernel& kernel, std::size_t budget) {
  const std::size_t n = std::clamp<std::size_t>(budget, 8, 4096);
  const double h = param.period / static_cast<double>(n);
  std::vector<ExtendedPoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(param.at(h * static_cast<double>(i)));

  struct Cell {
    double v;
    std::size_t i, j;
  };
  std::vector<Cell> cells;
  cells.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) cells.push_back({kernel(pts[i], pts[j]), i, j});

  const std::size_t top = std::min<std::size_t>(cells.size(), 64);
  std::partial_sort(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(top), cells.end(),
                    [](const Cell& a, const Cell& b) {
                      if (a.v != b.v) return a.v > b.v;
                      return a.i != b.i ? a.i < b.i : a.j < b.j;
                    });

  auto cyc = [n](std::size_t a, std::size_t b) {
    const std::size_t d = a > b ? a - b : b - a;
    return std::min(d, n - d);
  };
  std::vector<Cell> seeds;
  for (std::size_t k = 0; k < top && seeds.size() < 6; ++k) {
    bool far = true;
    for (const auto& s : seeds)
      if (cyc(s.i, cells[k].i) + cyc(s.j, cells[k].j) <= 3) far = false;
    if (far) seeds.push_back(cells[k]);
  }

  std::optional<PairExtremum> best;
  for (const auto& s : seeds) {
    double tp = h * static_cast<double>(s.i);
    double tq = h * static_cast<double>(s.j);
    double val = s.v;
    for (int round = 0; round < 200; ++round) {
      const double before = val;
      const double tol = kGoldenTol * std::max(1.0, param.period);
      const double np = golden_min([&](double t) { return -kernel(param.at(t), param.at(tq)); }, tp - h,
                                   tp + h, tol);
      const double vp = kernel(param.at(np), param.at(tq));
      if (vp > val) val = vp, tp = np;
      const double nq = golden_min([&](double t) { return -kernel(param.at(tp), param.at(t)); }, tq - h,
                                   tq + h, tol);
      const double vq = kernel(param.at(tp), param.at(nq));
      if (vq > val) val = vq, tq = nq;
      if (val - before <= 1e-15 * std::abs(val)) break;
    }
    if (!best || val > best->value) best = PairExtremum{val, param.at(tp), param.at(tq)};
  }
  return *best;
}

PairExtremum sup_pair_product(const BoundaryParam& param, const Point& x, const Point& y,
                              std::size_t budget) {
  if (x == y) fail(ErrorCode::InvalidArgument, "sup_pair_product needs distinct points");
  return maximize_pair(
      param, [&](const ExtendedPoint& p, const ExtendedPoint& q) { return pair_kernel(x, y, p, q); }, budget);
}

PairExtremum sup_pair_product(const Domain& d, const Point& x, const Point& y, std::size_t budget) {
  if (x == y) fail(ErrorCode::InvalidArgument, "sup_pair_product needs distinct points");
  d.require_inside(x);
  d.require_inside(y);
  if (d.kind() == DomainKind::BoundaryCloud) {
    const auto& s = std::get<BoundaryCloud>(d.variant()).samples();
    if (s.size() < 2) fail(ErrorCode::InvalidArgument, "boundary needs at least two points");
    const std::size_t cap = std::max<std::size_t>(budget, 2);
    const std::size_t stride = std::max<std::size_t>(1, (s.size() + cap - 1) / cap);
    std::size_t bi = 0, bj = 1;
    double bv = -1.0;
    for (std::size_t i = 0; i < s.size(); i += stride)
      for (std::size_t j = i + stride; j < s.size(); j += stride) {
        const double v = pair_kernel(x, y, s[i], s[j]);
        if (v > bv) bv = v, bi = i, bj = j;
      }
    if (stride > 1) {
      // Alternate full scans over one index with the other held fixed.
      for (int round = 0; round < 50; ++round) {
        const double before = bv;
        for (std::size_t i = 0; i < s.size(); ++i) {
          const double v = pair_kernel(x, y, s[i], s[bj]);
          if (v > bv) bv = v, bi = i;
        }
        for (std::size_t j = 0; j < s.size(); ++j) {
          const double v = pair_kernel(x, y, s[bi], s[j]);
          if (v > bv) bv = v, bj = j;
        }
        if (bv <= before) break;
      }
    }
    return {bv, s[bi], s[bj]};
  }
  if (d.dim() != 2) fail(ErrorCode::Unsupported, "pair supremum is implemented for planar domains and clouds");
  const double scale = std::max({euclid_dist(x, y), x[1], y[1]});
  return sup_pair_product(boundary_param(d, 0.5 * (x[0] + y[0]), scale), x, y, budget);
}

}  // namespace hypmet
