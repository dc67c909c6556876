#pragma once

#include <span>
#include <vector>

#include "lsfc/dense.hpp"

namespace lsfc {

/// One axis of the uniform collocation grid on (-L, L) with Dirichlet walls.
///
/// N is the number of intervals (even), h = 2L/N, and the M = N - 1 interior
/// nodes sit at x_k = k h for k = -N/2+1 ... N/2-1. Node storage index is
/// i0 = k + N/2 - 1 (zero-based).
class GridSpec {
 public:
  GridSpec(int n_half_count, double half_width);

  int n() const { return n_; }
  double half_width() const { return half_width_; }
  double spacing() const { return spacing_; }
  int node_count() const { return n_ - 1; }
  int k_min() const { return 1 - n_ / 2; }
  int k_max() const { return n_ / 2 - 1; }

  double node(int k) const { return k * spacing_; }
  std::span<const double> nodes() const { return nodes_; }

  GridSpec rescaled(double half_width) const { return GridSpec(n_, half_width); }

 private:
  int n_;
  double half_width_;
  double spacing_;
  std::vector<double> nodes_;
};

/// First and second derivative collocation matrices, d1(k, j) = s_k'(x_j)
/// and d2(k, j) = s_k''(x_j), in storage-index order.
struct DiffMatrices {
  DenseMatrix d1;
  DenseMatrix d2;
};

/// Little sinc function s_k(h, N, x). Evaluated through its finite sine
/// series, which has no removable singularities.
double lsf_eval(const GridSpec& grid, int k, double x);

/// Closed (Dirichlet-kernel) form of s_k. Exposed for cross-checking the
/// series; undefined at the removable singularities.
double lsf_eval_closed_form(const GridSpec& grid, int k, double x);

/// sum_k samples[k] s_k(x); samples are in storage-index order.
double interpolate(const GridSpec& grid, std::span<const double> samples, double x);

DiffMatrices build_diff_matrices(const GridSpec& grid);

/// Diagonal of d2 only, without forming the matrix.
std::vector<double> d2_diagonal(const GridSpec& grid);

}  // namespace lsfc
