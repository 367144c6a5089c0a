#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypmet/domain.hpp"
#include "hypmet/moebius.hpp"
#include "hypmet/point.hpp"

namespace hypmet {

enum class Method { ClosedForm, Numeric, Oracle };
const char* to_string(Method m);

/// How ttau obtains the boundary infimum. Auto picks a closed form when the
/// configuration is one of the special cases, else the numeric solver.
enum class Strategy { Auto, ClosedForm, Numeric, Oracle };

struct MetricValue {
  double value;
  Method method;
  /// Boundary witnesses: the argmin for ttau, the extremal pair for tau and
  /// rho_sup_absratio. Empty for closed-form rho and j.
  std::vector<ExtendedPoint> witnesses;
};

/// Hyperbolic metric of B^n or H^n.
MetricValue rho(const Domain& d, const Point& x, const Point& y);

enum class AxisKind { Ball, HalfSpace };

/// ρ between r·e and s·e on a diameter of the ball (-1 < r <= s < 1), or between
/// r·e_n and s·e_n on a vertical ray of the half-space (0 < r <= s).
double rho_axis(AxisKind kind, double r, double s);

/// ρ as sup of log|u,x,y,v| over boundary pairs, numerically.
MetricValue rho_sup_absratio(const Domain& d, const Point& x, const Point& y, std::size_t budget = 1024);

/// Distance ratio metric.
MetricValue j_metric(const Domain& d, const Point& x, const Point& y);

/// Scale invariant Cassinian metric.
MetricValue ttau(const Domain& d, const Point& x, const Point& y, Strategy strategy = Strategy::Auto,
                 std::size_t oracle_samples = 1'000'000);

/// Closed forms. Each throws InvalidArgument when its configuration does not
/// hold (within 1e-12 relative).
double ttau_ball_equal_norm(const Point& x, const Point& y);
double ttau_ball_collinear(const Point& x, const Point& y);
double ttau_halfplane_equal_height(const Point& x, const Point& y);
double ttau_halfplane_vertical(const Point& x, const Point& y);

/// Which closed form applies to (x, y) in a planar ball or half-plane, if any.
enum class SpecialCase { None, EqualNorm, Collinear, EqualHeight, Vertical };
const char* to_string(SpecialCase c);
SpecialCase special_case(const Domain& d, const Point& x, const Point& y);

enum class Frame { Ball, HalfPlane };

/// The rotated pairs (x', y') and (x'', y'') about the midpoint (x+y)/2.
struct RotatedPairs {
  Point x1, y1;  // x', y'
  Point x2, y2;  // x'', y''
};
RotatedPairs extremal_rotations(const Point& x, const Point& y, Frame frame);

struct Bounds {
  double lower;
  std::optional<double> upper;
};
Bounds ttau_bounds_ball(const Point& x, const Point& y);
Bounds ttau_bounds_halfplane(const Point& x, const Point& y);

/// Moebius invariant Cassinian metric. Planar domains and boundary clouds.
MetricValue tau(const Domain& d, const Point& x, const Point& y, std::size_t budget = 512);

/// Metrics of the image domain f(D) at f(x), f(y), for x, y given in D.
/// Planar ball, half-plane and polygon bases push their boundary
/// parametrization through f; other bases use `samples` pushed boundary
/// samples. Throws OutsideDomain when f sends a point of D to ∞.
MetricValue rho_image(const Domain& base, const MoebiusMap& f, const Point& x, const Point& y);
MetricValue j_image(const Domain& base, const MoebiusMap& f, const Point& x, const Point& y,
                    std::size_t samples = 4096);
MetricValue ttau_image(const Domain& base, const MoebiusMap& f, const Point& x, const Point& y,
                       std::size_t samples = 4096);
MetricValue tau_image(const Domain& base, const MoebiusMap& f, const Point& x, const Point& y,
                      std::size_t budget = 512, std::size_t samples = 4096);

}  // namespace hypmet
