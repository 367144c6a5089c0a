#include "hypmet/moebius.hpp"

#include <cmath>

#include "json.hpp"

namespace hypmet {

namespace {

constexpr double kOrthoTol = 1e-12;
constexpr double kInvertFloor = 1e-300;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate(std::size_t dim, const MoebiusPrimitive& prim) {
  std::visit(Overloaded{
                 [&](const Translate& t) {
                   if (t.offset.dim() != dim)
                     fail(ErrorCode::DimensionMismatch, "translation has wrong dimension");
                 },
                 [&](const Scale& s) {
                   if (!(s.factor > 0.0) || !std::isfinite(s.factor))
                     fail(ErrorCode::InvalidArgument, "scale factor must be positive");
                 },
                 [&](const Orthogonal& o) {
                   if (o.n != dim || o.q.size() != dim * dim)
                     fail(ErrorCode::DimensionMismatch, "orthogonal matrix has wrong size");
                   for (std::size_t i = 0; i < dim; ++i)
                     for (std::size_t j = 0; j < dim; ++j) {
                       double s = 0.0;
                       for (std::size_t k = 0; k < dim; ++k) s += o.q[k * dim + i] * o.q[k * dim + j];
                       if (std::abs(s - (i == j ? 1.0 : 0.0)) > kOrthoTol)
                         fail(ErrorCode::InvalidArgument, "matrix is not orthogonal");
                     }
                 },
                 [](const Invert&) {},
             },
             prim);
}

ExtendedPoint apply_one(const MoebiusPrimitive& prim, const ExtendedPoint& x, std::size_t dim) {
  return std::visit(
      Overloaded{
          [&](const Translate& t) -> ExtendedPoint {
            if (x.is_infinite()) return x;
            return x.finite() + t.offset;
          },
          [&](const Scale& s) -> ExtendedPoint {
            if (x.is_infinite()) return x;
            return x.finite() * s.factor;
          },
          [&](const Orthogonal& o) -> ExtendedPoint {
            if (x.is_infinite()) return x;
            const Point& p = x.finite();
            Point r = Point::zero(o.n);
            for (std::size_t i = 0; i < o.n; ++i) {
              double s = 0.0;
              for (std::size_t k = 0; k < o.n; ++k) s += o.q[i * o.n + k] * p[k];
              r[i] = s;
            }
            return r;
          },
          [&](const Invert&) -> ExtendedPoint {
            if (x.is_infinite()) return Point::zero(dim);
            const Point& p = x.finite();
            const double r2 = p.norm2();
            if (std::sqrt(r2) < kInvertFloor) return ExtendedPoint::infinity();
            return p * (1.0 / r2);
          },
      },
      prim);
}

MoebiusPrimitive invert_primitive(const MoebiusPrimitive& prim) {
  return std::visit(Overloaded{
                        [](const Translate& t) -> MoebiusPrimitive { return Translate{-t.offset}; },
                        [](const Scale& s) -> MoebiusPrimitive { return Scale{1.0 / s.factor}; },
                        [](const Orthogonal& o) -> MoebiusPrimitive {
                          std::vector<double> qt(o.q.size());
                          for (std::size_t i = 0; i < o.n; ++i)
                            for (std::size_t j = 0; j < o.n; ++j) qt[j * o.n + i] = o.q[i * o.n + j];
                          return Orthogonal{o.n, std::move(qt)};
                        },
                        [](const Invert&) -> MoebiusPrimitive { return Invert{}; },
                    },
                    prim);
}

}  // namespace

MoebiusMap::MoebiusMap(std::size_t dim, std::vector<MoebiusPrimitive> chain)
    : dim_(dim), chain_(std::move(chain)) {
  if (dim_ < 2) fail(ErrorCode::InvalidArgument, "Moebius map dimension must be at least 2");
  for (const auto& p : chain_) validate(dim_, p);
}

MoebiusMap MoebiusMap::translate(Point v) {
  const std::size_t n = v.dim();
  return MoebiusMap(n, {Translate{std::move(v)}});
}

MoebiusMap MoebiusMap::scale(std::size_t dim, double factor) {
  return MoebiusMap(dim, {Scale{factor}});
}

MoebiusMap MoebiusMap::orthogonal(std::size_t dim, std::vector<double> q) {
  return MoebiusMap(dim, {Orthogonal{dim, std::move(q)}});
}

MoebiusMap MoebiusMap::invert(std::size_t dim) { return MoebiusMap(dim, {Invert{}}); }

ExtendedPoint MoebiusMap::apply(const ExtendedPoint& x) const {
  if (x.is_finite() && x.finite().dim() != dim_)
    fail(ErrorCode::DimensionMismatch, "point dimension does not match the map");
  ExtendedPoint cur = x;
  for (const auto& prim : chain_) cur = apply_one(prim, cur, dim_);
  return cur;
}

MoebiusMap MoebiusMap::then(const MoebiusMap& next) const {
  if (next.dim_ != dim_) fail(ErrorCode::DimensionMismatch, "cannot chain maps of different dimension");
  std::vector<MoebiusPrimitive> c = chain_;
  c.insert(c.end(), next.chain_.begin(), next.chain_.end());
  MoebiusMap m(dim_);
  m.chain_ = std::move(c);
  return m;
}

MoebiusMap MoebiusMap::inverse() const {
  MoebiusMap m(dim_);
  m.chain_.reserve(chain_.size());
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) m.chain_.push_back(invert_primitive(*it));
  return m;
}

bool MoebiusMap::has_inversion() const {
  for (const auto& p : chain_)
    if (std::holds_alternative<Invert>(p)) return true;
  return false;
}

std::string MoebiusMap::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& prim : chain_) {
    std::visit(Overloaded{
                   [&](const Translate& t) {
                     out.push_back({{"op", "translate"},
                                    {"v", std::vector<double>(t.offset.coords().begin(),
                                                              t.offset.coords().end())}});
                   },
                   [&](const Scale& s) { out.push_back({{"op", "scale"}, {"factor", s.factor}}); },
                   [&](const Orthogonal& o) {
                     nlohmann::json rows = nlohmann::json::array();
                     for (std::size_t i = 0; i < o.n; ++i)
                       rows.push_back(std::vector<double>(o.q.begin() + i * o.n, o.q.begin() + (i + 1) * o.n));
                     out.push_back({{"op", "orthogonal"}, {"matrix", rows}});
                   },
                   [&](const Invert&) { out.push_back({{"op", "invert"}}); },
               },
               prim);
  }
  return out.dump();
}

MoebiusMap MoebiusMap::from_json(const std::string& text, std::size_t dim) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("Moebius chain JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("chain")) j = j["chain"];
  if (!j.is_array()) fail(ErrorCode::Parse, "Moebius chain JSON must be a list of primitives");

  std::vector<MoebiusPrimitive> chain;
  try {
    for (const auto& item : j) {
      const std::string op = item.at("op").get<std::string>();
      if (op == "translate") {
        chain.push_back(Translate{Point(item.at("v").get<std::vector<double>>())});
      } else if (op == "scale") {
        chain.push_back(Scale{item.at("factor").get<double>()});
      } else if (op == "orthogonal") {
        std::vector<double> q;
        const auto& rows = item.at("matrix");
        for (const auto& row : rows) {
          auto r = row.get<std::vector<double>>();
          if (r.size() != rows.size()) fail(ErrorCode::Parse, "orthogonal matrix must be square");
          q.insert(q.end(), r.begin(), r.end());
        }
        chain.push_back(Orthogonal{rows.size(), std::move(q)});
      } else if (op == "invert") {
        chain.push_back(Invert{});
      } else {
        fail(ErrorCode::Parse, "unknown Moebius primitive '" + op + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("Moebius chain JSON: ") + e.what());
  }
  return MoebiusMap(dim, std::move(chain));
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) { return g.then(f); }

MoebiusMap canonical_h2b(std::size_t n) {
  const Point en = Point::unit(n, n - 1);
  return MoebiusMap(n, {Translate{en}, Invert{}, Scale{2.0}, Translate{-en}});
}

MoebiusMap ball_automorphism(const Point& a) {
  const std::size_t n = a.dim();
  const double a2 = a.norm2();
  if (!(a2 < 1.0)) fail(ErrorCode::OutsideDomain, "ball automorphism needs |a| < 1");
  if (a2 == 0.0) return MoebiusMap::identity(n);

  const Point star = a / a2;
  const double r2 = (1.0 - a2) / a2;
  std::vector<double> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i * n + j] = (i == j ? 1.0 : 0.0) - 2.0 * a[i] * a[j] / a2;
  return MoebiusMap(n, {Translate{-star}, Invert{}, Scale{r2}, Translate{star}, Orthogonal{n, std::move(h)}});
}

}  // namespace hypmet
