#pragma once

#include "hypmet/point.hpp"

namespace hypmet {

/// Infimum of the boundary distance product |x-p||y-p| and where it occurs.
struct BoundaryExtremum {
  double value;
  Point argmin;
  /// False when the infimum is only approached (e.g. along an unbounded boundary).
  bool attained = true;
};

/// Supremum of a kernel over pairs of boundary points (either may be ∞).
struct PairExtremum {
  double value;
  ExtendedPoint p;
  ExtendedPoint q;
};

}  // namespace hypmet
