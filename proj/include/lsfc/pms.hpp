#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "lsfc/potential.hpp"
#include "lsfc/transforms.hpp"

namespace lsfc {

// Parameter choice by the principle of minimal sensitivity: the variational
// parameters are those that minimize the trace of the Hamiltonian matrix.

enum class StrategyKind { ScaleOnly, ScaleAniso, ScaleAnisoRot };

std::string_view strategy_name(StrategyKind kind);
StrategyKind parse_strategy(std::string_view name);  // "scale", "aniso", "rot"

struct OptimizationStrategy {
  StrategyKind kind = StrategyKind::ScaleOnly;
  std::int64_t max_iterations = 20'000;  // objective evaluations per simplex run
  double tolerance = 1e-6;               // simplex diameter, scaled coordinates
  int jittered_seeds = 3;
  std::uint64_t seed = 0x5eed;
  int angle_count = -1;  // -1: D - 1 planes (the two-angle form for D = 3)

  void validate() const;
};

struct ScaleOptimum {
  double half_width = 0.0;
  double trace = 0.0;
  double lower = 0.0;  // final bracket on L
  double upper = 0.0;
};

struct TransformOptimum {
  TransformParams params;
  double trace = 0.0;
  std::int64_t evaluations = 0;
};

inline constexpr double kMinHalfWidth = 1e-4;
inline constexpr double kMaxHalfWidth = 1e4;

/// L minimizing trace(L) at fixed N, with relative accuracy 1e-8. Throws
/// OptimizationError if the minimum is not interior to [1e-4, 1e4].
ScaleOptimum optimize_scale(const PolynomialPotential& pot, int n);

/// Minimizes the trace over the parameter set of the strategy. Angles are
/// confined to [0, pi/2]. The result never has a larger trace than the
/// nested simpler strategy.
TransformOptimum optimize_full(const PolynomialPotential& pot, int n, const OptimizationStrategy& strategy);

int default_angle_count(int dims);

struct SimplexResult {
  std::vector<double> point;
  double value = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

/// Derivative-free Nelder-Mead descent from `start` with per-coordinate
/// initial steps. Stops when the simplex diameter drops below `tolerance`
/// or after `max_evaluations`.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> start,
                          const std::vector<double>& steps, double tolerance, std::int64_t max_evaluations);

/// Golden-section minimization of a unimodal f on [a, b].
double golden_section(const std::function<double(double)>& f, double a, double b, double tolerance);

}  // namespace lsfc
