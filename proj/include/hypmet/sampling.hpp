#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hypmet/domain.hpp"
#include "hypmet/moebius.hpp"
#include "hypmet/point.hpp"

namespace hypmet {

std::uint64_t splitmix64(std::uint64_t x);

/// Generator for trial `index` of a run seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

double uniform(std::mt19937_64& rng, double lo, double hi);

/// Uniform in B^n: Gaussian direction, radius u^(1/n).
Point sample_ball(std::mt19937_64& rng, std::size_t n);
/// Heights log-uniform in [1e-3, 1e3], horizontal offsets on a comparable scale.
Point sample_halfspace(std::mt19937_64& rng, std::size_t n);
/// Uniform in the polygon's bounding box, rejected until inside.
Point sample_polygon(std::mt19937_64& rng, const Domain& poly);
Point sample_in(std::mt19937_64& rng, const Domain& d);

/// Convex polygon with 8-32 vertices on a random ellipse.
Domain random_convex_polygon(std::mt19937_64& rng);

/// Orthonormalized Gaussian matrix, row-major.
std::vector<double> random_orthogonal(std::mt19937_64& rng, std::size_t n);

/// Random chain of 1-5 primitives with at least one inversion.
MoebiusMap random_moebius(std::mt19937_64& rng, std::size_t n);

/// Random map with an inversion whose pole stays at least `margin` away from
/// the closure of d (never ∞ inside an unbounded d).
MoebiusMap random_moebius_avoiding(std::mt19937_64& rng, const Domain& d, double margin = 0.05);

}  // namespace hypmet
