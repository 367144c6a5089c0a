#pragma once

#include <cstddef>
#include <functional>

#include "hypmet/domain.hpp"
#include "hypmet/extremum.hpp"
#include "hypmet/point.hpp"

namespace hypmet {

// Minimization of g(p) = |x-p||y-p| over domain boundaries, plus the pair
// supremum behind the Moebius invariant Cassinian metric.

/// Unit circle. Closed form when |x| = |y| (within 1e-12 relative), otherwise a
/// 1024-point angular grid with golden-section refinement of every local
/// minimum.
BoundaryExtremum min_product_circle(const Point& x, const Point& y);

/// Real axis, for x, y in the upper half-plane. Closed forms for equal heights
/// and for vertical pairs; otherwise the quartic |x-p|^2|y-p|^2 is minimized
/// between the stationary points of its derivative.
BoundaryExtremum min_product_line(const Point& x, const Point& y);

/// Closed segment [a, b] in any dimension.
BoundaryExtremum min_product_segment(const Point& x, const Point& y, const Point& a, const Point& b);

/// Unit sphere in R^n, by reduction to the plane through 0, x and y.
BoundaryExtremum min_product_sphere(const Point& x, const Point& y);

/// Hyperplane x_n = 0, by reduction to the vertical plane through x and y.
BoundaryExtremum min_product_hyperplane(const Point& x, const Point& y);

/// Samples the parametrized boundary and golden-refines every sampled local
/// minimum. Boundary points at ∞ are never minimizers.
BoundaryExtremum min_product_param(const BoundaryParam& param, const Point& x, const Point& y,
                                   std::size_t samples);

/// Brute-force ground truth: dense sampling of ∂D in its natural parameter
/// (angle, arclength, or a truncated line/plane), then local refinement around
/// the sampled minima. Independent of the closed forms above. Supports planar
/// domains, B^3, H^3 and clouds.
BoundaryExtremum oracle_min_product(const Domain& d, const Point& x, const Point& y,
                                    std::size_t samples);

/// sup over p, q in ∂D of |x-y||p-q| / sqrt(|x-p||y-q||x-q||y-p|). Planar
/// domains and clouds; ∞ is a candidate for the half-plane.
PairExtremum sup_pair_product(const Domain& d, const Point& x, const Point& y, std::size_t budget);
PairExtremum sup_pair_product(const BoundaryParam& param, const Point& x, const Point& y,
                              std::size_t budget);

using PairKernel = std::function<double(const ExtendedPoint&, const ExtendedPoint&)>;

/// Grid over param x param (budget^2, budget capped at 4096), then alternating
/// golden refinement of p and q from the best separated grid cells.
PairExtremum maximize_pair(const BoundaryParam& param, const PairKernel& kernel, std::size_t budget);

/// The τ pair kernel with the limits for p or q at ∞.
double pair_kernel(const Point& x, const Point& y, const ExtendedPoint& p, const ExtendedPoint& q);

/// Golden-section minimization on [lo, hi] down to width `tol`.
/// Returns the abscissa of the best evaluated point.
double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol);

/// True when candidate (value, argmin) should replace best: strictly smaller
/// value, or a tie within 1e-12 relative with a lexicographically smaller point.
bool improves(double value, const Point& argmin, double best_value, const Point& best_argmin);

/// Orthonormal 2-frame used to reduce B^n / H^n problems to the plane.
struct PlaneFrame {
  Point origin;
  Point u;  // first in-plane axis
  Point v;  // second in-plane axis (e_n for half-spaces)

  Point to_plane(const Point& p) const;
  Point from_plane(const Point& p2) const;
};

/// Plane through 0, x and y (any completion when they are collinear with 0).
PlaneFrame ball_frame(const Point& x, const Point& y);
/// Vertical plane containing x, y and the normal e_n, origin on x_n = 0 below x.
PlaneFrame halfspace_frame(const Point& x, const Point& y);

}  // namespace hypmet
