#include "hypmet/point.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace hypmet {

namespace {

void check_coords(std::span<const double> c) {
  if (c.size() < 2) fail(ErrorCode::InvalidArgument, "point dimension must be at least 2");
  for (double v : c)
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "point coordinates must be finite");
}

}  // namespace

Point::Point(std::initializer_list<double> coords) : c_(coords.begin(), coords.end()) {
  check_coords(this->coords());
}

Point::Point(std::span<const double> coords) : c_(coords.begin(), coords.end()) {
  check_coords(coords);
}

Point Point::zero(std::size_t n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "point dimension must be at least 2");
  return Point(Unchecked{}, n);
}

Point Point::unit(std::size_t n, std::size_t axis) {
  Point p = zero(n);
  if (axis >= n) fail(ErrorCode::InvalidArgument, "basis index out of range");
  p.c_[axis] = 1.0;
  return p;
}

double Point::norm2() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return s;
}

double Point::norm() const {
  if (c_.size() == 2) return std::hypot(c_[0], c_[1]);
  return std::sqrt(norm2());
}

double Point::dot(const Point& o) const {
  require_same_dim(*this, o);
  double s = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * o.c_[i];
  return s;
}

Point& Point::operator+=(const Point& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Point Point::operator-() const {
  Point r = *this;
  for (double& v : r.c_) v = -v;
  return r;
}

bool operator==(const Point& a, const Point& b) {
  return a.c_.size() == b.c_.size() && std::equal(a.c_.begin(), a.c_.end(), b.c_.begin());
}

std::string Point::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim())
    fail(ErrorCode::DimensionMismatch, "dimension mismatch: " + std::to_string(a.dim()) +
                                           " vs " + std::to_string(b.dim()));
}

bool lex_less(const Point& a, const Point& b, double tol) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::abs(a[i] - b[i]) <= tol) continue;
    return a[i] < b[i];
  }
  return false;
}

const Point& ExtendedPoint::finite() const {
  if (!p_) fail(ErrorCode::InvalidArgument, "point at infinity has no coordinates");
  return *p_;
}

bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return *a.p_ == *b.p_;
}

std::string ExtendedPoint::str() const { return p_ ? p_->str() : std::string("inf"); }

double euclid_dist(const Point& a, const Point& b) {
  require_same_dim(a, b);
  if (a.dim() == 2) return std::hypot(a[0] - b[0], a[1] - b[1]);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double chordal_dist(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite()) return 1.0 / std::sqrt(1.0 + b.finite().norm2());
  if (b.is_infinite()) return 1.0 / std::sqrt(1.0 + a.finite().norm2());
  const Point& p = a.finite();
  const Point& q = b.finite();
  return euclid_dist(p, q) / (std::sqrt(1.0 + p.norm2()) * std::sqrt(1.0 + q.norm2()));
}

double absolute_ratio(const ExtendedPoint& a, const ExtendedPoint& b, const ExtendedPoint& c,
                      const ExtendedPoint& d) {
  const ExtendedPoint* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j])
        fail(ErrorCode::InvalidArgument, "absolute ratio needs four distinct points");

  if (a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite()) {
    const double num = euclid_dist(a.finite(), c.finite()) * euclid_dist(b.finite(), d.finite());
    const double den = euclid_dist(a.finite(), b.finite()) * euclid_dist(c.finite(), d.finite());
    return num / den;
  }
  return chordal_dist(a, c) * chordal_dist(b, d) / (chordal_dist(a, b) * chordal_dist(c, d));
}

}  // namespace hypmet
