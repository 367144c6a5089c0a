#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "hypmet/extremum.hpp"
#include "hypmet/moebius.hpp"
#include "hypmet/point.hpp"

namespace hypmet {

struct UnitBall {
  std::size_t dim;
};

/// Upper half-space x_n > 0.
struct HalfSpace {
  std::size_t dim;
};

/// Closed simple polygon in the plane. Vertices are stored counterclockwise;
/// clockwise input is reversed on construction.
class Polygon2D {
 public:
  explicit Polygon2D(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.size(); }
  /// Edge i runs from vertex i to vertex i+1 (cyclically).
  std::pair<const Point&, const Point&> edge(std::size_t i) const {
    return {v_[i], v_[(i + 1) % v_.size()]};
  }
  double perimeter() const noexcept { return perimeter_; }
  /// Point at arclength s (taken modulo the perimeter) from vertex 0.
  Point at_arclength(double s) const;
  int winding_number(const Point& x) const;

 private:
  std::vector<Point> v_;
  std::vector<double> cum_;  // cumulative arclength at each vertex
  double perimeter_ = 0.0;
};

/// A domain known only through a finite sample of its boundary.
class BoundaryCloud {
 public:
  explicit BoundaryCloud(std::vector<Point> samples);

  const std::vector<Point>& samples() const noexcept { return s_; }
  std::size_t dim() const noexcept { return s_.front().dim(); }

 private:
  std::vector<Point> s_;
};

enum class DomainKind { UnitBall, HalfSpace, Polygon2D, BoundaryCloud };

class Domain {
 public:
  using Variant = std::variant<UnitBall, HalfSpace, Polygon2D, BoundaryCloud>;

  static Domain ball(std::size_t n);
  static Domain halfspace(std::size_t n);
  static Domain polygon(std::vector<Point> vertices);
  static Domain cloud(std::vector<Point> samples);
  /// {"vertices": [[x,y], ...]}
  static Domain polygon_from_json(const std::string& text);
  /// {"points": [[...], ...]}
  static Domain cloud_from_json(const std::string& text);

  DomainKind kind() const noexcept { return static_cast<DomainKind>(v_.index()); }
  const Variant& variant() const noexcept { return v_; }
  std::size_t dim() const;
  bool bounded() const noexcept { return kind() != DomainKind::HalfSpace; }
  std::string describe() const;

  /// Open-set membership. A boundary cloud has no interior description, so any
  /// point off the samples counts as inside.
  bool contains(const Point& x) const;
  /// Positive inside, negative outside, zero on the boundary (ball, half-space,
  /// polygon). For a cloud this is the distance to the nearest sample.
  double signed_distance(const Point& x) const;
  /// Throws OutsideDomain unless contains(x).
  void require_inside(const Point& x) const;

  Domain similarity(double lambda, const std::vector<double>& q, const Point& b) const;

 private:
  explicit Domain(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// d(x, ∂D).
double dist_to_boundary(const Domain& d, const Point& x);

/// A closed boundary curve of a planar domain, parametrized over [0, period).
/// Unbounded boundaries pass through ∞ once per period.
struct BoundaryParam {
  double period;
  std::function<ExtendedPoint(double)> at;
};

/// Natural parametrization of ∂D for planar ball, half-plane and polygon
/// domains. For the half-plane, t -> center + scale*tan(t - π/2) with t = 0
/// corresponding to ∞; `center` and `scale` only affect sampling resolution.
BoundaryParam boundary_param(const Domain& d, double center = 0.0, double scale = 1.0);

/// f(∂D) parametrized by the same parameter.
BoundaryParam push_through(BoundaryParam param, MoebiusMap f);

/// `count` boundary samples (uniform in the natural parameter). For unbounded
/// domains ∞ is omitted and the boundary is truncated to |x| <= extent.
std::vector<Point> densify(const Domain& d, std::size_t count, double extent = 0.0);

/// Boundary cloud of f(D): ∂D densified and pushed through f. Images at ∞ are
/// dropped; for a half-space f(∞) (when finite) is added.
Domain image_cloud(const Domain& d, const MoebiusMap& f, std::size_t count, double extent = 0.0);

/// inf over p in ∂D of |x-p||y-p| with the minimizing boundary point.
BoundaryExtremum boundary_inf_product(const Domain& d, const Point& x, const Point& y);

/// The Cassinian oval {z : |z-f1||z-f2| = b^2}.
class CassinianOval {
 public:
  CassinianOval(Point focus1, Point focus2, double b);

  const Point& focus1() const noexcept { return f1_; }
  const Point& focus2() const noexcept { return f2_; }
  double b() const noexcept { return b_; }
  /// Half the focal distance.
  double a() const;
  /// Shape parameter b/a (∞ when the foci coincide).
  double e() const;
  Point center() const { return (f1_ + f2_) * 0.5; }

 private:
  Point f1_, f2_;
  double b_;
};

enum class OvalShape { TwoLoops, Lemniscate, Peanut, Convex, Circle };
const char* to_string(OvalShape s);

OvalShape oval_classify(const CassinianOval& c);

/// sqrt(a^2 + b^2), the largest distance from the focal midpoint to the oval.
double oval_max_radius(const CassinianOval& c);

struct OvalTracePoint {
  double theta;  // polar angle in the focal frame
  int branch;    // +1 or -1: sign in r^2 = a^2 cos 2θ ± sqrt(b^4 - a^4 sin^2 2θ)
  Point p;       // in the coordinates of the foci
};

/// Samples the planar oval at m equispaced polar angles about the focal
/// midpoint, over every real branch. Angles with no real radius are skipped.
std::vector<OvalTracePoint> oval_trace(const CassinianOval& c, std::size_t m);

struct MaximalOval {
  CassinianOval oval;
  Point tangent;
};

/// Largest Cassinian oval with foci x, y inside the closure of D.
MaximalOval maximal_oval(const Domain& d, const Point& x, const Point& y);

}  // namespace hypmet
