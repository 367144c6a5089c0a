#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hypmet {

struct Violation {
  std::size_t trial;
  std::string relation;  // e.g. "ttau <= rho"
  std::string inputs;
  double lhs;
  double rhs;
  double slack;  // rhs - lhs (or the tolerance margin for equalities)
};

struct SuiteReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;
  std::size_t violation_count = 0;
  /// First violations only; violation_count has the total.
  std::vector<Violation> violations;
  /// Largest amount by which any check fell short of its tolerance; 0 when
  /// every check passed.
  double max_slack_violation = 0.0;
  /// Smallest slack seen over all checks.
  double min_slack = 0.0;

  bool passed() const noexcept { return violation_count == 0; }
  std::string to_json() const;
};

struct SuiteOptions {
  std::size_t dim = 2;
  /// Pair-grid budget for τ evaluations.
  std::size_t tau_budget = 64;
  /// Boundary samples for image domains.
  std::size_t image_samples = 4096;
};

/// ball-sandwich, halfspace-sandwich, j-sandwich, tau-sandwich,
/// bounds-sandwich, rotation-ordering, moebius-distortion,
/// absratio-invariance, tau-moebius-invariance, ttau-metric,
/// similarity-invariance, oval-geometry.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for unknown names or trials == 0. The same
/// (name, trials, seed, options) always gives the same report.
SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed,
                      const SuiteOptions& options = {});

enum class SequenceId { BallLower, BallUpper, BallAdditive, HalfLower, HalfUpper, HalfAdditive, MoebLower, MoebUpper };

const char* to_string(SequenceId id);
/// Accepts "ball-lower", "BallLower", ...
SequenceId parse_sequence(const std::string& s);
const std::vector<SequenceId>& all_sequences();

struct SharpnessProbe {
  SequenceId id;
  double t;
  double observed;
  double target;
  /// Accepted |observed - target|. MoebUpper converges slowly from below and
  /// is accepted in [target - tolerance, target + 1e-9].
  double tolerance;

  bool within() const;
  std::string to_json() const;
};

/// The ratio (or additive gap) along the extremal sequence at parameter t.
/// Evaluated in closed forms that stay accurate as t approaches its limit.
/// Throws InvalidArgument when t is outside the sequence's range.
SharpnessProbe sharpness_probe(SequenceId id, double t);

/// Same quantity computed by building the points and calling the metric
/// functions (and canonical_h2b for the Moebius sequences). Only meaningful
/// at moderate t where the points are representable.
double sharpness_probe_direct(SequenceId id, double t);

/// Default parameter for each sequence, and its ladder toward the limit.
double default_parameter(SequenceId id);
std::vector<double> ladder(SequenceId id);

}  // namespace hypmet
