#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lsfc/dense.hpp"
#include "lsfc/grid_basis.hpp"
#include "lsfc/potential.hpp"
#include "lsfc/simd/kernels.hpp"
#include "lsfc/transforms.hpp"

namespace lsfc {

inline constexpr std::int64_t kDefaultMaxGridPoints = 10'000'000;
inline constexpr std::int64_t kMaxDenseDimension = 4096;

/// Discretized Hamiltonian on the M^D product grid, kept matrix-free:
///
///   H = sum_a prefactor_a (-d2 along axis a) + diag(V(nodes)).
///
/// Vectors are indexed by flat grid label minus one, with the first axis
/// varying slowest.
class HamiltonianOperator {
 public:
  HamiltonianOperator(GridSpec grid, int dims, std::vector<double> kinetic_prefactors,
                      std::vector<double> potential_diagonal);

  int dims() const { return dims_; }
  const GridSpec& grid() const { return grid_; }
  int points_per_axis() const { return grid_.node_count(); }
  std::size_t size() const { return potential_.size(); }

  const DenseMatrix& d2() const { return d2_; }
  std::span<const double> kinetic_prefactors() const { return prefactors_; }
  std::span<const double> potential_diagonal() const { return potential_; }

  /// out = H v.
  void apply(std::span<const double> v, std::span<double> out) const;
  std::vector<double> apply(std::span<const double> v) const;

  /// Same product with an explicit kernel table (equivalence testing).
  void apply(std::span<const double> v, std::span<double> out, const simd::KernelTable& kernels) const;

  double kinetic_trace() const;
  double potential_trace() const;
  double trace() const { return kinetic_trace() + potential_trace(); }

 private:
  GridSpec grid_;
  int dims_;
  DenseMatrix d2_;
  std::vector<double> prefactors_;
  std::vector<double> potential_;
  std::vector<DenseMatrix> axis_kinetic_;  // -prefactor_a * d2
};

/// Builds the operator for V transformed by `params` on an N-interval grid
/// of half-width params.half_width.
HamiltonianOperator build(const PolynomialPotential& pot, const TransformParams& params, int n,
                          std::int64_t max_points = kDefaultMaxGridPoints);

std::vector<double> apply(const HamiltonianOperator& op, std::span<const double> v);

/// Explicit M^D x M^D matrix; only for M^D <= 4096.
DenseMatrix dense_assemble(const HamiltonianOperator& op);

struct TraceParts {
  double kinetic = 0.0;
  double potential = 0.0;
  double total() const { return kinetic + potential; }
};

/// Trace of H without building it: the kinetic part from the d2 diagonal and
/// the potential part from per-axis power sums of the nodes.
TraceParts trace_parts(const PolynomialPotential& pot, const TransformParams& params, int n);
double trace(const PolynomialPotential& pot, const TransformParams& params, int n);
double trace(const HamiltonianOperator& op);

/// Potential part of the trace for an already transformed polynomial.
double potential_grid_sum(const PolynomialPotential& transformed, const GridSpec& grid);

}  // namespace lsfc
