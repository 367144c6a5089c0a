#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "hypmet/point.hpp"

namespace hypmet {

struct Translate {
  Point offset;
};

struct Scale {
  double factor;  // > 0
};

/// Linear isometry x -> Qx. Row-major n x n, Q^T Q = I within 1e-12.
struct Orthogonal {
  std::size_t n;
  std::vector<double> q;
};

/// Inversion in the unit sphere, x -> x/|x|^2, 0 <-> ∞.
struct Invert {};

using MoebiusPrimitive = std::variant<Translate, Scale, Orthogonal, Invert>;

/// A Moebius transformation of R^n ∪ {∞} kept as a chain of primitives.
/// chain()[0] is applied first. Immutable once built.
class MoebiusMap {
 public:
  explicit MoebiusMap(std::size_t dim, std::vector<MoebiusPrimitive> chain = {});

  static MoebiusMap identity(std::size_t dim) { return MoebiusMap(dim); }
  static MoebiusMap translate(Point v);
  static MoebiusMap scale(std::size_t dim, double factor);
  static MoebiusMap orthogonal(std::size_t dim, std::vector<double> q);
  static MoebiusMap invert(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<MoebiusPrimitive>& chain() const noexcept { return chain_; }

  ExtendedPoint apply(const ExtendedPoint& x) const;
  /// Image of a finite point; the result may be ∞.
  ExtendedPoint operator()(const Point& x) const { return apply(ExtendedPoint(x)); }

  /// x -> next(this(x)).
  MoebiusMap then(const MoebiusMap& next) const;
  MoebiusMap inverse() const;

  /// The preimage of ∞.
  ExtendedPoint pole() const { return inverse().apply(ExtendedPoint::infinity()); }

  bool has_inversion() const;

  /// JSON list of {"op": "translate"|"scale"|"orthogonal"|"invert", ...}.
  std::string to_json() const;
  static MoebiusMap from_json(const std::string& text, std::size_t dim);

 private:
  std::size_t dim_;
  std::vector<MoebiusPrimitive> chain_;
};

/// f ∘ g, i.e. g is applied first.
MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);
inline MoebiusMap inverse(const MoebiusMap& f) { return f.inverse(); }

/// f(z) = -e_n + 2(z + e_n)/|z + e_n|^2, mapping H^n onto B^n.
MoebiusMap canonical_h2b(std::size_t n);

/// A Moebius self-map of B^n sending a (|a| < 1) to 0: inversion in the sphere
/// orthogonal to the unit sphere centred at a/|a|^2, then reflection in a^⊥.
MoebiusMap ball_automorphism(const Point& a);

}  // namespace hypmet
