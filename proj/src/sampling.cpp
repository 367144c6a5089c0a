#include "hypmet/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypmet {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ index));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  // 53 random bits -> [0,1); avoids the library-specific distribution classes
  // so runs are reproducible across standard libraries.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

namespace {

double gaussian(std::mt19937_64& rng) {
  double u1;
  do u1 = uniform(rng, 0.0, 1.0);
  while (u1 == 0.0);
  const double u2 = uniform(rng, 0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Point gaussian_point(std::mt19937_64& rng, std::size_t n) {
  Point p = Point::zero(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = gaussian(rng);
  return p;
}

Point unit_direction(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Point g = gaussian_point(rng, n);
    const double r = g.norm();
    if (r > 1e-12) return g / r;
  }
}

}  // namespace

Point sample_ball(std::mt19937_64& rng, std::size_t n) {
  const Point dir = unit_direction(rng, n);
  const double r = std::pow(uniform(rng, 0.0, 1.0), 1.0 / static_cast<double>(n));
  return dir * r;
}

Point sample_halfspace(std::mt19937_64& rng, std::size_t n) {
  Point p = Point::zero(n);
  const double h = std::pow(10.0, uniform(rng, -3.0, 3.0));
  const double w = std::pow(10.0, uniform(rng, -3.0, 3.0));
  for (std::size_t i = 0; i + 1 < n; ++i) p[i] = uniform(rng, -w, w);
  p[n - 1] = h;
  return p;
}

Point sample_polygon(std::mt19937_64& rng, const Domain& poly) {
  const auto& v = std::get<Polygon2D>(poly.variant()).vertices();
  double x0 = v[0][0], x1 = v[0][0], y0 = v[0][1], y1 = v[0][1];
  for (const auto& p : v) {
    x0 = std::min(x0, p[0]), x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]), y1 = std::max(y1, p[1]);
  }
  for (;;) {
    Point p{uniform(rng, x0, x1), uniform(rng, y0, y1)};
    if (poly.contains(p)) return p;
  }
}

Point sample_in(std::mt19937_64& rng, const Domain& d) {
  switch (d.kind()) {
    case DomainKind::UnitBall: {
      for (;;) {
        Point p = sample_ball(rng, d.dim());
        if (p.norm() < 1.0) return p;
      }
    }
    case DomainKind::HalfSpace: return sample_halfspace(rng, d.dim());
    case DomainKind::Polygon2D: return sample_polygon(rng, d);
    case DomainKind::BoundaryCloud: break;
  }
  fail(ErrorCode::Unsupported, "no sampler for boundary clouds");
}

Domain random_convex_polygon(std::mt19937_64& rng) {
  const auto k = static_cast<std::size_t>(8 + (rng() % 25));
  const double a = uniform(rng, 0.5, 3.0), b = uniform(rng, 0.5, 3.0);
  const double rot = uniform(rng, 0.0, std::numbers::pi);
  const double cx = uniform(rng, -2.0, 2.0), cy = uniform(rng, -2.0, 2.0);
  std::vector<double> ang(k);
  for (auto& t : ang) t = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  std::sort(ang.begin(), ang.end());
  ang.erase(std::unique(ang.begin(), ang.end(), [](double s, double t) { return t - s < 1e-6; }), ang.end());
  while (ang.size() < 3) ang.push_back(ang.back() + 2.0);
  std::vector<Point> v;
  for (double t : ang) {
    const double ex = a * std::cos(t), ey = b * std::sin(t);
    v.push_back(Point{cx + ex * std::cos(rot) - ey * std::sin(rot), cy + ex * std::sin(rot) + ey * std::cos(rot)});
  }
  return Domain::polygon(std::move(v));
}

std::vector<double> random_orthogonal(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> rows;
  while (rows.size() < n) {
    Point g = gaussian_point(rng, n);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& r : rows) g -= r * g.dot(r);
    const double len = g.norm();
    if (len > 1e-8) rows.push_back(g / len);
  }
  std::vector<double> q;
  q.reserve(n * n);
  for (const auto& r : rows)
    for (std::size_t j = 0; j < n; ++j) q.push_back(r[j]);
  return q;
}

namespace {

MoebiusPrimitive random_similarity_primitive(std::mt19937_64& rng, std::size_t n) {
  switch (rng() % 3) {
    case 0: {
      Point v = Point::zero(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = uniform(rng, -2.0, 2.0);
      return Translate{v};
    }
    case 1: return Scale{std::pow(10.0, uniform(rng, -1.0, 1.0))};
    default: return Orthogonal{n, random_orthogonal(rng, n)};
  }
}

}  // namespace

MoebiusMap random_moebius(std::mt19937_64& rng, std::size_t n) {
  const auto len = static_cast<std::size_t>(1 + rng() % 5);
  const auto inv_at = static_cast<std::size_t>(rng() % len);
  std::vector<MoebiusPrimitive> chain;
  for (std::size_t i = 0; i < len; ++i) {
    if (i == inv_at || rng() % 4 == 0)
      chain.push_back(Invert{});
    else
      chain.push_back(random_similarity_primitive(rng, n));
  }
  return MoebiusMap(n, std::move(chain));
}

MoebiusMap random_moebius_avoiding(std::mt19937_64& rng, const Domain& d, double margin) {
  const std::size_t n = d.dim();
  Point pole = Point::zero(n);
  switch (d.kind()) {
    case DomainKind::UnitBall:
      pole = unit_direction(rng, n) * (1.0 + margin + std::pow(10.0, uniform(rng, -1.5, 1.0)));
      break;
    case DomainKind::HalfSpace:
      for (std::size_t i = 0; i + 1 < n; ++i) pole[i] = uniform(rng, -3.0, 3.0);
      pole[n - 1] = -(margin + std::pow(10.0, uniform(rng, -1.5, 1.0)));
      break;
    case DomainKind::Polygon2D: {
      const auto& v = std::get<Polygon2D>(d.variant()).vertices();
      double x0 = v[0][0], x1 = v[0][0], y0 = v[0][1], y1 = v[0][1];
      for (const auto& p : v) {
        x0 = std::min(x0, p[0]), x1 = std::max(x1, p[0]);
        y0 = std::min(y0, p[1]), y1 = std::max(y1, p[1]);
      }
      const double pad = 1.0 + std::max(x1 - x0, y1 - y0);
      for (;;) {
        pole = Point{uniform(rng, x0 - pad, x1 + pad), uniform(rng, y0 - pad, y1 + pad)};
        if (d.signed_distance(pole) < -margin) break;
      }
      break;
    }
    case DomainKind::BoundaryCloud: fail(ErrorCode::Unsupported, "no map sampler for boundary clouds");
  }
  Point b = Point::zero(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = uniform(rng, -2.0, 2.0);
  std::vector<MoebiusPrimitive> chain{Translate{-pole}, Invert{},
                                      Scale{std::pow(10.0, uniform(rng, -1.0, 1.0))},
                                      Orthogonal{n, random_orthogonal(rng, n)}, Translate{b}};
  return MoebiusMap(n, std::move(chain));
}

}  // namespace hypmet
