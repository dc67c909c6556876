#include "lsfc/hamiltonian.hpp"

#include <string>

#include "lsfc/error.hpp"
#include "lsfc/indexing.hpp"

namespace lsfc {

HamiltonianOperator::HamiltonianOperator(GridSpec grid, int dims, std::vector<double> kinetic_prefactors,
                                         std::vector<double> potential_diagonal)
    : grid_(std::move(grid)),
      dims_(dims),
      d2_(build_diff_matrices(grid_).d2),
      prefactors_(std::move(kinetic_prefactors)),
      potential_(std::move(potential_diagonal)) {
  if (static_cast<int>(prefactors_.size()) != dims_) throw ShapeError("hamiltonian: one kinetic prefactor per axis");
  if (static_cast<std::int64_t>(potential_.size()) != grid_volume(grid_.node_count(), dims_))
    throw ShapeError("hamiltonian: potential diagonal must have M^D entries");
  for (double p : prefactors_) {
    DenseMatrix k = d2_;
    k *= -p;
    axis_kinetic_.push_back(std::move(k));
  }
}

void HamiltonianOperator::apply(std::span<const double> v, std::span<double> out,
                                const simd::KernelTable& kernels) const {
  if (v.size() != size() || out.size() != size())
    throw ShapeError("apply: vector length " + std::to_string(v.size()) + " does not match operator size " +
                     std::to_string(size()));
  const std::size_t m = static_cast<std::size_t>(points_per_axis());
  kernels.multiply(potential_.data(), v.data(), out.data(), size());
  std::size_t outer = 1;
  std::size_t inner = size() / m;
  for (int a = 0; a < dims_; ++a) {
    kernels.contract_axis(axis_kinetic_[a].data(), m, outer, inner, v.data(), out.data());
    outer *= m;
    inner /= m;
  }
}

void HamiltonianOperator::apply(std::span<const double> v, std::span<double> out) const {
  apply(v, out, simd::active_kernels());
}

std::vector<double> HamiltonianOperator::apply(std::span<const double> v) const {
  std::vector<double> out(size());
  apply(v, out);
  return out;
}

double HamiltonianOperator::kinetic_trace() const {
  double diag = 0.0;
  for (int i = 0; i < points_per_axis(); ++i) diag -= d2_(i, i);
  double pref = 0.0;
  for (double p : prefactors_) pref += p;
  return static_cast<double>(size() / points_per_axis()) * pref * diag;
}

double HamiltonianOperator::potential_trace() const {
  double s = 0.0;
  for (double v : potential_) s += v;
  return s;
}

HamiltonianOperator build(const PolynomialPotential& pot, const TransformParams& params, int n,
                          std::int64_t max_points) {
  GridSpec grid(n, params.half_width);
  const int dims = pot.dims();
  const std::int64_t volume = grid_volume(grid.node_count(), dims);
  if (volume > max_points)
    throw CapacityError("hamiltonian: " + std::to_string(volume) + " grid points exceed the limit of " +
                        std::to_string(max_points));
  TransformedProblem problem = transformed_problem(pot, params);

  std::vector<double> potential(static_cast<std::size_t>(volume));
  std::vector<int> label(dims, 0);  // zero-based odometer, last axis fastest
  std::vector<double> point(dims, grid.nodes()[0]);
  for (std::int64_t flat = 0; flat < volume; ++flat) {
    potential[flat] = problem.potential(point);
    for (int a = dims - 1; a >= 0; --a) {
      if (++label[a] < grid.node_count()) {
        point[a] = grid.nodes()[label[a]];
        break;
      }
      label[a] = 0;
      point[a] = grid.nodes()[0];
    }
  }
  return HamiltonianOperator(std::move(grid), dims, std::move(problem.kinetic_prefactors), std::move(potential));
}

std::vector<double> apply(const HamiltonianOperator& op, std::span<const double> v) { return op.apply(v); }

DenseMatrix dense_assemble(const HamiltonianOperator& op) {
  if (static_cast<std::int64_t>(op.size()) > kMaxDenseDimension)
    throw CapacityError("dense_assemble: dimension " + std::to_string(op.size()) + " exceeds " +
                        std::to_string(kMaxDenseDimension));
  const int m = op.points_per_axis();
  const int dims = op.dims();
  const std::size_t size = op.size();
  DenseMatrix h(size, size);
  for (std::size_t row = 0; row < size; ++row) {
    const MultiIndex ri = decode(static_cast<FlatIndex>(row) + 1, m, dims);
    h(row, row) += op.potential_diagonal()[row];
    // Couple only to labels that differ from `row` on a single axis.
    for (int a = 0; a < dims; ++a) {
      MultiIndex ci = ri;
      for (int label = 1; label <= m; ++label) {
        ci[a] = label;
        const std::size_t col = static_cast<std::size_t>(encode(ci, m) - 1);
        h(row, col) -= op.kinetic_prefactors()[a] * op.d2()(ri[a] - 1, label - 1);
      }
    }
  }
  return h;
}

double potential_grid_sum(const PolynomialPotential& transformed, const GridSpec& grid) {
  const int max_e = transformed.degree();
  std::vector<double> power_sums(max_e + 1, 0.0);
  for (double x : grid.nodes()) {
    double p = 1.0;
    for (int e = 0; e <= max_e; ++e) {
      power_sums[e] += p;
      p *= x;
    }
  }
  double total = 0.0;
  for (const Monomial& t : transformed.terms()) {
    double s = t.coefficient;
    for (int e : t.exponents) s *= power_sums[e];
    total += s;
  }
  return total;
}

TraceParts trace_parts(const PolynomialPotential& pot, const TransformParams& params, int n) {
  GridSpec grid(n, params.half_width);
  const TransformedProblem problem = transformed_problem(pot, params);
  double diag = 0.0;
  for (double d : d2_diagonal(grid)) diag -= d;
  double pref = 0.0;
  for (double p : problem.kinetic_prefactors) pref += p;
  double lines = 1.0;  // M^{D-1}
  for (int a = 1; a < pot.dims(); ++a) lines *= grid.node_count();
  return {lines * pref * diag, potential_grid_sum(problem.potential, grid)};
}

double trace(const PolynomialPotential& pot, const TransformParams& params, int n) {
  return trace_parts(pot, params, n).total();
}

double trace(const HamiltonianOperator& op) { return op.trace(); }

}  // namespace lsfc
