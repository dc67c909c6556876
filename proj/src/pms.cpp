#include "lsfc/pms.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "lsfc/error.hpp"
#include "lsfc/hamiltonian.hpp"

namespace lsfc {

std::string_view strategy_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::ScaleOnly:
      return "scale";
    case StrategyKind::ScaleAniso:
      return "aniso";
    case StrategyKind::ScaleAnisoRot:
      return "rot";
  }
  return "?";
}

StrategyKind parse_strategy(std::string_view name) {
  if (name == "scale") return StrategyKind::ScaleOnly;
  if (name == "aniso") return StrategyKind::ScaleAniso;
  if (name == "rot") return StrategyKind::ScaleAnisoRot;
  throw DomainError("unknown strategy '" + std::string(name) + "' (expected scale, aniso or rot)");
}

void OptimizationStrategy::validate() const {
  if (!(tolerance > 0.0)) throw DomainError("strategy: tolerance must be positive");
  if (max_iterations < 1) throw DomainError("strategy: max_iterations must be positive");
  if (jittered_seeds < 0) throw DomainError("strategy: jittered_seeds must be non-negative");
}

int default_angle_count(int dims) { return dims > 1 ? dims - 1 : 0; }

double golden_section(const std::function<double(double)>& f, double a, double b, double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

ScaleOptimum optimize_scale(const PolynomialPotential& pot, int n) {
  GridSpec(n, 1.0);  // validates N
  const int dims = pot.dims();
  auto trace_at = [&](double log_l) { return trace(pot, TransformParams::identity(dims, std::exp(log_l)), n); };

  // Coarse logarithmic scan to bracket the minimum, then golden section in log L.
  const double lo = std::log(kMinHalfWidth), hi = std::log(kMaxHalfWidth);
  constexpr int kScan = 160;
  std::vector<double> values(kScan + 1);
  for (int i = 0; i <= kScan; ++i) values[i] = trace_at(lo + (hi - lo) * i / kScan);
  const auto best = static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());
  if (best == 0 || best == kScan || !std::isfinite(values[best]))
    throw OptimizationError("optimize_scale: no interior trace minimum in [1e-4, 1e4]",
                            {std::exp(lo + (hi - lo) * best / kScan)}, values[best]);

  const double a = lo + (hi - lo) * (best - 1) / kScan;
  const double b = lo + (hi - lo) * (best + 1) / kScan;
  const double tol = 1e-10;
  const double log_l = golden_section(trace_at, a, b, tol);
  ScaleOptimum out;
  out.half_width = std::exp(log_l);
  out.trace = trace_at(log_l);
  out.lower = std::exp(log_l - tol);
  out.upper = std::exp(log_l + tol);
  return out;
}

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> start,
                          const std::vector<double>& steps, double tolerance, std::int64_t max_evaluations) {
  const std::size_t dim = start.size();
  SimplexResult result;
  if (dim == 0) {
    result.point = start;
    result.value = f(start);
    result.evaluations = 1;
    result.converged = true;
    return result;
  }
  std::vector<std::vector<double>> x(dim + 1, start);
  std::vector<double> fx(dim + 1);
  for (std::size_t i = 0; i < dim; ++i) x[i + 1][i] += steps[i];
  std::int64_t evals = 0;
  auto eval = [&](const std::vector<double>& p) {
    ++evals;
    const double v = f(p);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  for (std::size_t i = 0; i <= dim; ++i) fx[i] = eval(x[i]);

  std::vector<std::size_t> order(dim + 1);
  auto point_along = [&](const std::vector<double>& centroid, const std::vector<double>& worst, double t) {
    std::vector<double> p(dim);
    for (std::size_t j = 0; j < dim; ++j) p[j] = centroid[j] + t * (worst[j] - centroid[j]);
    return p;
  };

  for (;;) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[dim - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) diameter = std::max(diameter, std::abs(x[i][j] - x[best][j]));
    if (diameter < tolerance || evals >= max_evaluations) {
      result.point = x[best];
      result.value = fx[best];
      result.evaluations = evals;
      result.converged = diameter < tolerance;
      return result;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i <= dim; ++i)
      if (i != worst)
        for (std::size_t j = 0; j < dim; ++j) centroid[j] += x[i][j] / dim;

    const auto reflected = point_along(centroid, x[worst], -1.0);
    const double fr = eval(reflected);
    if (fr < fx[best]) {
      const auto expanded = point_along(centroid, x[worst], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        x[worst] = expanded;
        fx[worst] = fe;
      } else {
        x[worst] = reflected;
        fx[worst] = fr;
      }
      continue;
    }
    if (fr < fx[second]) {
      x[worst] = reflected;
      fx[worst] = fr;
      continue;
    }
    const bool outside = fr < fx[worst];
    const auto contracted = point_along(centroid, x[worst], outside ? -0.5 : 0.5);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : fx[worst])) {
      x[worst] = contracted;
      fx[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < dim; ++j) x[i][j] = x[best][j] + 0.5 * (x[i][j] - x[best][j]);
      fx[i] = eval(x[i]);
    }
  }
}

namespace {

// Scaled coordinates: u = (log L, log sigma_2, ..., log sigma_D, angles...).
struct ParameterMap {
  int dims;
  int scale_count;
  int angle_count;

  std::size_t size() const { return 1 + scale_count + angle_count; }

  TransformParams decode(const std::vector<double>& u) const {
    TransformParams p = TransformParams::identity(dims, std::exp(u[0]));
    for (int i = 0; i < scale_count; ++i) p.axis_scales[i + 1] = std::exp(u[1 + i]);
    p.angles.resize(angle_count);
    for (int j = 0; j < angle_count; ++j)
      p.angles[j] = std::clamp(u[1 + scale_count + j], 0.0, std::numbers::pi / 2.0);
    return p;
  }

  std::vector<double> encode(const TransformParams& p) const {
    std::vector<double> u(size(), 0.0);
    u[0] = std::log(p.half_width);
    for (int i = 0; i < scale_count; ++i) u[1 + i] = std::log(p.axis_scale(i + 1));
    for (int j = 0; j < angle_count && j < static_cast<int>(p.angles.size()); ++j) u[1 + scale_count + j] = p.angles[j];
    return u;
  }
};

TransformOptimum minimize_over(const PolynomialPotential& pot, int n, const OptimizationStrategy& strategy,
                               const ParameterMap& map, const TransformParams& start) {
  auto objective = [&](const std::vector<double>& u) {
    const double l = std::exp(u[0]);
    if (!(l >= kMinHalfWidth && l <= kMaxHalfWidth)) return std::numeric_limits<double>::infinity();
    return trace(pot, map.decode(u), n);
  };

  std::vector<std::vector<double>> seeds{map.encode(start)};
  std::mt19937_64 rng(strategy.seed);
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2.0);
  for (int s = 0; s < strategy.jittered_seeds; ++s) {
    std::vector<double> u = seeds.front();
    for (int i = 0; i < 1 + map.scale_count; ++i) u[i] += jitter(rng);
    for (int j = 0; j < map.angle_count; ++j) u[1 + map.scale_count + j] = angle(rng);
    seeds.push_back(std::move(u));
  }
  const std::vector<double> steps(map.size(), 0.1);

  TransformOptimum best;
  best.trace = std::numeric_limits<double>::infinity();
  std::int64_t evaluations = 0;
  bool any_converged = false;
  std::vector<double> best_u;
  for (const auto& seed : seeds) {
    SimplexResult r = nelder_mead(objective, seed, steps, strategy.tolerance, strategy.max_iterations);
    // Restart from the collapsed simplex until a fresh simplex confirms it.
    for (int polish = 0; polish < 10 && r.converged; ++polish) {
      const std::vector<double> small(map.size(), 100.0 * strategy.tolerance);
      SimplexResult again = nelder_mead(objective, r.point, small, strategy.tolerance, strategy.max_iterations);
      again.evaluations += r.evaluations;
      const bool moved = again.value < r.value;
      r = again;
      if (!moved) break;
    }
    evaluations += r.evaluations;
    any_converged = any_converged || r.converged;
    if (!r.converged) continue;
    const TransformParams p = map.decode(r.point);
    if (r.value < best.trace || (r.value == best.trace && p.half_width < best.params.half_width)) {
      best.params = p;
      best.trace = r.value;
      best_u = r.point;
    }
  }
  if (!any_converged)
    throw OptimizationError("optimize_full: simplex did not converge within " +
                                std::to_string(strategy.max_iterations) + " evaluations",
                            seeds.front(), objective(seeds.front()));
  best.evaluations = evaluations;
  return best;
}

}  // namespace

TransformOptimum optimize_full(const PolynomialPotential& pot, int n, const OptimizationStrategy& strategy) {
  strategy.validate();
  const int dims = pot.dims();
  const ScaleOptimum scale = optimize_scale(pot, n);
  TransformOptimum out;
  out.params = TransformParams::identity(dims, scale.half_width);
  out.trace = scale.trace;
  if (strategy.kind == StrategyKind::ScaleOnly || dims == 1) return out;

  const ParameterMap aniso{dims, dims - 1, 0};
  TransformOptimum a = minimize_over(pot, n, strategy, aniso, out.params);
  if (a.trace <= out.trace) out = a;
  if (strategy.kind == StrategyKind::ScaleAniso) return out;

  const int angles = strategy.angle_count < 0 ? default_angle_count(dims) : strategy.angle_count;
  if (angles > dims * (dims - 1) / 2) throw DomainError("strategy: too many rotation angles for D");
  const ParameterMap rot{dims, dims - 1, angles};
  TransformParams start = out.params;
  start.angles.assign(angles, 0.0);
  TransformOptimum r = minimize_over(pot, n, strategy, rot, start);
  if (r.trace <= out.trace) {
    r.evaluations += out.evaluations;
    out = r;
  }
  return out;
}

}  // namespace lsfc
