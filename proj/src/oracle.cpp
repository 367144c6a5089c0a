// Brute-force boundary minimization. Deliberately shares nothing with the
// closed forms and plane reductions in solver.cpp beyond golden_min.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <vector>

#include "hypmet/solver.hpp"

namespace hypmet {

namespace {

using Vec3 = std::array<double, 3>;

double dist3(const Vec3& a, const double* b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// 1-D sweep over a parameter interval followed by golden refinement of every
// sampled local minimum.
BoundaryExtremum sweep_1d(const std::function<Point(double)>& at, double lo, double hi, bool periodic,
                          const Point& x, const Point& y, std::size_t samples) {
  auto g = [&](double t) {
    const Point p = at(t);
    return euclid_dist(x, p) * euclid_dist(y, p);
  };
  const double h = (hi - lo) / static_cast<double>(periodic ? samples : samples - 1);
  std::vector<double> v(samples);
  for (std::size_t i = 0; i < samples; ++i) v[i] = g(lo + h * static_cast<double>(i));

  double best_v = v[0], best_t = lo;
  for (std::size_t i = 0; i < samples; ++i) {
    double prev, next;
    if (periodic) {
      prev = v[(i + samples - 1) % samples];
      next = v[(i + 1) % samples];
    } else {
      prev = i > 0 ? v[i - 1] : std::numeric_limits<double>::infinity();
      next = i + 1 < samples ? v[i + 1] : std::numeric_limits<double>::infinity();
    }
    if (v[i] > prev || v[i] > next) continue;
    const double c = lo + h * static_cast<double>(i);
    double a = c - h, b = c + h;
    if (!periodic) a = std::max(a, lo), b = std::min(b, hi);
    const double t = golden_min(g, a, b, 1e-15 * std::max(1.0, std::abs(c)));
    const double gt = g(t);
    if (gt < best_v) best_v = gt, best_t = t;
    if (v[i] < best_v) best_v = v[i], best_t = c;
  }
  return {best_v, at(best_t), true};
}

const std::vector<double>& fibonacci_cache(std::size_t count) {
  static std::mutex mu;
  static std::size_t cached = 0;
  static std::vector<double> pts;
  std::lock_guard lock(mu);
  if (cached != count) {
    pts.assign(3 * count, 0.0);
    const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      pts[3 * i] = r * std::cos(ga * static_cast<double>(i));
      pts[3 * i + 1] = r * std::sin(ga * static_cast<double>(i));
      pts[3 * i + 2] = z;
    }
    cached = count;
  }
  return pts;
}

// Powell-style descent in a 2-D chart: alternating golden line searches along
// two directions, the older one replaced by the net displacement each round.
std::array<double, 2> powell2_from(const std::function<double(double, double)>& F, std::array<double, 2> w,
                                   double radius, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  std::array<std::array<double, 2>, 2> dirs{{{c, s}, {-s, c}}};
  double fw = F(w[0], w[1]);
  for (int round = 0; round < 80; ++round) {
    const auto start = w;
    const double f0 = fw;
    for (const auto& d : dirs) {
      auto line = [&](double t) { return F(w[0] + t * d[0], w[1] + t * d[1]); };
      const double t = golden_min(line, -radius, radius, 1e-16 * std::max(radius, 1.0));
      const double ft = line(t);
      if (ft < fw) fw = ft, w = {w[0] + t * d[0], w[1] + t * d[1]};
    }
    std::array<double, 2> disp{w[0] - start[0], w[1] - start[1]};
    const double len = std::hypot(disp[0], disp[1]);
    if (len > 0.0) {
      dirs[0] = dirs[1];
      dirs[1] = {disp[0] / len, disp[1] / len};
    }
    if (f0 - fw <= 1e-16 * fw) break;
  }
  return w;
}

// Line searches stall at kinks and in thin valleys when the product is nearly
// conical (a point very close to the boundary). Restart from the best point
// with a rotated direction pair, shrinking the window when nothing improves.
std::array<double, 2> powell2(const std::function<double(double, double)>& F, double radius) {
  std::array<double, 2> w = powell2_from(F, {0.0, 0.0}, radius, 0.0);
  double fw = F(w[0], w[1]);
  double r = radius;
  const double floor_r = 1e-15 * std::max(radius, 1.0);
  for (int k = 1; k < 400 && r > floor_r; ++k) {
    const auto v = powell2_from(F, w, r, 2.399963229728653 * k);
    const double fv = F(v[0], v[1]);
    if (fv < fw * (1.0 - 1e-15)) {
      const double step = std::hypot(v[0] - w[0], v[1] - w[1]);
      w = v, fw = fv;
      r = std::min(r, std::max(4.0 * step, floor_r));
    } else {
      r *= 0.5;
    }
  }
  return w;
}

std::vector<std::size_t> pick_seeds(const std::vector<double>& vals, std::size_t top,
                                    const std::function<double(std::size_t, std::size_t)>& sep,
                                    double min_sep, std::size_t max_seeds) {
  std::vector<std::size_t> idx(vals.size());
  std::iota(idx.begin(), idx.end(), 0);
  top = std::min(top, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(top), idx.end(),
                    [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  std::vector<std::size_t> seeds;
  for (std::size_t k = 0; k < top && seeds.size() < max_seeds; ++k) {
    bool far = true;
    for (auto s : seeds)
      if (sep(s, idx[k]) < min_sep) far = false;
    if (far) seeds.push_back(idx[k]);
  }
  return seeds;
}

BoundaryExtremum oracle_sphere3(const Point& x, const Point& y, std::size_t samples) {
  const auto& pts = fibonacci_cache(samples);
  const Vec3 xv{x[0], x[1], x[2]}, yv{y[0], y[1], y[2]};
  std::vector<double> vals(samples);
  for (std::size_t i = 0; i < samples; ++i) vals[i] = dist3(xv, &pts[3 * i]) * dist3(yv, &pts[3 * i]);

  const double spacing = std::sqrt(4.0 * std::numbers::pi / static_cast<double>(samples));
  auto sep = [&](std::size_t a, std::size_t b) { return dist3({pts[3 * a], pts[3 * a + 1], pts[3 * a + 2]}, &pts[3 * b]); };
  const auto seeds = pick_seeds(vals, 256, sep, 0.05, 6);

  double best_v = vals[seeds.front()];
  Point best_p{pts[3 * seeds.front()], pts[3 * seeds.front() + 1], pts[3 * seeds.front() + 2]};
  for (auto s : seeds) {
    const Point p0{pts[3 * s], pts[3 * s + 1], pts[3 * s + 2]};
    // Tangent basis at p0.
    Point e = std::abs(p0[0]) < 0.9 ? Point{1.0, 0.0, 0.0} : Point{0.0, 1.0, 0.0};
    Point t1 = e - p0 * e.dot(p0);
    t1 = t1 / t1.norm();
    const Point t2{p0[1] * t1[2] - p0[2] * t1[1], p0[2] * t1[0] - p0[0] * t1[2], p0[0] * t1[1] - p0[1] * t1[0]};
    auto chart = [&](double u, double v) {
      Point q = p0 + t1 * u + t2 * v;
      return q / q.norm();
    };
    auto F = [&](double u, double v) {
      const Point q = chart(u, v);
      return euclid_dist(x, q) * euclid_dist(y, q);
    };
    const auto w = powell2(F, 4.0 * spacing);
    const double fv = F(w[0], w[1]);
    if (fv < best_v) best_v = fv, best_p = chart(w[0], w[1]);
  }
  return {best_v, best_p, true};
}

BoundaryExtremum oracle_plane3(const Point& x, const Point& y, std::size_t samples) {
  const double cx = 0.5 * (x[0] + y[0]), cy = 0.5 * (x[1] + y[1]);
  const double W = 0.5 * std::hypot(x[0] - y[0], x[1] - y[1]) + 2.0 * std::max(x[2], y[2]);
  const auto side = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(samples))));
  const double h = 2.0 * W / static_cast<double>(side - 1);
  const Vec3 xv{x[0], x[1], x[2]}, yv{y[0], y[1], y[2]};
  std::vector<double> vals(side * side);
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) {
      const double p[3] = {cx - W + h * static_cast<double>(i), cy - W + h * static_cast<double>(j), 0.0};
      vals[i * side + j] = dist3(xv, p) * dist3(yv, p);
    }
  auto coord = [&](std::size_t k) {
    return std::array<double, 2>{cx - W + h * static_cast<double>(k / side), cy - W + h * static_cast<double>(k % side)};
  };
  auto sep = [&](std::size_t a, std::size_t b) {
    const auto pa = coord(a), pb = coord(b);
    return std::hypot(pa[0] - pb[0], pa[1] - pb[1]);
  };
  const auto seeds = pick_seeds(vals, 256, sep, 0.05 * W, 6);

  double best_v = vals[seeds.front()];
  Point best_p{coord(seeds.front())[0], coord(seeds.front())[1], 0.0};
  for (auto s : seeds) {
    const auto c = coord(s);
    auto F = [&](double u, double v) {
      const Point q{c[0] + u, c[1] + v, 0.0};
      return euclid_dist(x, q) * euclid_dist(y, q);
    };
    const auto w = powell2(F, 4.0 * h);
    const double fv = F(w[0], w[1]);
    if (fv < best_v) best_v = fv, best_p = Point{c[0] + w[0], c[1] + w[1], 0.0};
  }
  return {best_v, best_p, true};
}

}  // namespace

BoundaryExtremum oracle_min_product(const Domain& d, const Point& x, const Point& y, std::size_t samples) {
  if (samples < 1000) fail(ErrorCode::InvalidArgument, "oracle needs at least 1000 samples");
  d.require_inside(x);
  d.require_inside(y);
  const std::size_t n = d.dim();
  switch (d.kind()) {
    case DomainKind::UnitBall:
      if (n == 2)
        return sweep_1d([](double t) { return Point{std::cos(t), std::sin(t)}; }, 0.0, 2.0 * std::numbers::pi,
                        true, x, y, samples);
      if (n == 3) return oracle_sphere3(x, y, samples);
      break;
    case DomainKind::HalfSpace:
      if (n == 2) {
        const double L = 10.0 * (x.norm() + y.norm() + 1.0);
        auto e = sweep_1d([](double t) { return Point{t, 0.0}; }, -L, L, false, x, y, samples);
        for (double end : {-L, L}) {
          const Point p{end, 0.0};
          if (euclid_dist(x, p) * euclid_dist(y, p) < 2.0 * e.value)
            fail(ErrorCode::Unsupported, "oracle truncation window too small");
        }
        return e;
      }
      if (n == 3) return oracle_plane3(x, y, samples);
      break;
    case DomainKind::Polygon2D: {
      const auto& poly = std::get<Polygon2D>(d.variant());
      return sweep_1d([&](double s) { return poly.at_arclength(s); }, 0.0, poly.perimeter(), true, x, y,
                      samples);
    }
    case DomainKind::BoundaryCloud: {
      const auto& s = std::get<BoundaryCloud>(d.variant()).samples();
      std::size_t bi = 0;
      double bv = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < s.size(); ++i) {
        const double v = euclid_dist(x, s[i]) * euclid_dist(y, s[i]);
        if (v < bv) bv = v, bi = i;
      }
      return {bv, s[bi], true};
    }
  }
  fail(ErrorCode::Unsupported, "oracle supports planar domains, B^3, H^3 and clouds");
}

}  // namespace hypmet
