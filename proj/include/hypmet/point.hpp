#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

#include "hypmet/error.hpp"

namespace hypmet {

/// A point of R^n, n >= 2, with finite coordinates.
class Point {
 public:
  using Storage = boost::container::small_vector<double, 4>;

  Point(std::initializer_list<double> coords);
  explicit Point(std::span<const double> coords);

  static Point zero(std::size_t n);
  /// The standard basis vector e_{axis+1} of R^n.
  static Point unit(std::size_t n, std::size_t axis);

  std::size_t dim() const noexcept { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  std::span<const double> coords() const noexcept { return {c_.data(), c_.size()}; }
  /// Last coordinate, i.e. the height above the hyperplane x_n = 0.
  double height() const { return c_.back(); }

  double norm() const;
  double norm2() const;
  double dot(const Point& o) const;

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(double s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend Point operator/(Point a, double s) { return a *= 1.0 / s; }
  Point operator-() const;

  friend bool operator==(const Point& a, const Point& b);

  std::string str() const;

 private:
  struct Unchecked {};
  Point(Unchecked, std::size_t n) : c_(n, 0.0) {}

  Storage c_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Throws DimensionMismatch unless a and b live in the same R^n.
void require_same_dim(const Point& a, const Point& b);

/// Strict lexicographic order where coordinates within `tol` count as equal.
/// Used to break ties between symmetric extremal points deterministically.
bool lex_less(const Point& a, const Point& b, double tol = 1e-9);

/// A point of the Moebius space R^n ∪ {∞}.
class ExtendedPoint {
 public:
  ExtendedPoint(Point p) : p_(std::move(p)) {}  // NOLINT: implicit by design of the API
  static ExtendedPoint infinity() { return ExtendedPoint(); }

  bool is_infinite() const noexcept { return !p_.has_value(); }
  bool is_finite() const noexcept { return p_.has_value(); }
  /// Throws InvalidArgument for ∞.
  const Point& finite() const;

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b);

  std::string str() const;

 private:
  ExtendedPoint() = default;
  std::optional<Point> p_;
};

double euclid_dist(const Point& a, const Point& b);

/// Chordal distance q(a,b) = |a-b| / (sqrt(1+|a|^2) sqrt(1+|b|^2)), with
/// q(a,∞) = 1/sqrt(1+|a|^2) and q(∞,∞) = 0.
double chordal_dist(const ExtendedPoint& a, const ExtendedPoint& b);

/// |a,b,c,d| = q(a,c) q(b,d) / (q(a,b) q(c,d)) for pairwise distinct points.
/// Finite quadruples use the equivalent Euclidean cross ratio.
double absolute_ratio(const ExtendedPoint& a, const ExtendedPoint& b,
                      const ExtendedPoint& c, const ExtendedPoint& d);

}  // namespace hypmet
