#include "lsfc/grid_basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lsfc/error.hpp"

namespace lsfc {

namespace {

constexpr double kPi = std::numbers::pi;

// Sine-basis representation
//   s_k(x) = (2/N) sum_{n=1}^{N-1} sin(n pi (x_k + L)/2L) sin(n pi (x + L)/2L).
// At a node x_k + L = (k + N/2) h, so the phase n pi (x_k + L)/2L reduces to
// n pi (k + N/2)/N exactly, independent of L.
double node_phase(const GridSpec& g, int k, int n) {
  return kPi * n * static_cast<double>(k + g.n() / 2) / g.n();
}

void check_k(const GridSpec& g, int k) {
  if (k < g.k_min() || k > g.k_max())
    throw DomainError("LSF index " + std::to_string(k) + " outside [" + std::to_string(g.k_min()) + ", " +
                      std::to_string(g.k_max()) + "]");
}

void check_x(const GridSpec& g, double x) {
  if (!(x > -g.half_width() && x < g.half_width()))
    throw DomainError("point " + std::to_string(x) + " outside (-L, L)");
}

}  // namespace

GridSpec::GridSpec(int n_half_count, double half_width)
    : n_(n_half_count), half_width_(half_width), spacing_(0.0) {
  if (n_ < 4 || n_ % 2 != 0) throw DomainError("grid N must be an even integer >= 4, got " + std::to_string(n_));
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("grid half-width L must be positive");
  spacing_ = 2.0 * half_width_ / n_;
  nodes_.reserve(n_ - 1);
  for (int k = k_min(); k <= k_max(); ++k) nodes_.push_back(k * spacing_);
}

double lsf_eval(const GridSpec& grid, int k, double x) {
  check_k(grid, k);
  check_x(grid, x);
  const double u = kPi * (x + grid.half_width()) / (2.0 * grid.half_width());
  double sum = 0.0;
  for (int n = 1; n < grid.n(); ++n) sum += std::sin(node_phase(grid, k, n)) * std::sin(n * u);
  return 2.0 * sum / grid.n();
}

double lsf_eval_closed_form(const GridSpec& grid, int k, double x) {
  check_k(grid, k);
  check_x(grid, x);
  const int n = grid.n();
  const double h = grid.spacing();
  const double chi_minus = kPi / (2.0 * n * h) * (x - k * h);
  const double chi_plus = kPi / (2.0 * n * h) * (x + k * h);
  return (std::sin((2 * n + 1) * chi_minus) / std::sin(chi_minus) -
          std::cos((2 * n + 1) * chi_plus) / std::cos(chi_plus)) /
         (2.0 * n);
}

double interpolate(const GridSpec& grid, std::span<const double> samples, double x) {
  if (samples.size() != static_cast<std::size_t>(grid.node_count()))
    throw ShapeError("interpolate: expected " + std::to_string(grid.node_count()) + " samples, got " +
                     std::to_string(samples.size()));
  check_x(grid, x);
  // Project onto the sine modes once, then evaluate the series.
  const int n = grid.n();
  const double u = kPi * (x + grid.half_width()) / (2.0 * grid.half_width());
  double sum = 0.0;
  for (int mode = 1; mode < n; ++mode) {
    double coeff = 0.0;
    for (int k = grid.k_min(); k <= grid.k_max(); ++k)
      coeff += samples[k - grid.k_min()] * std::sin(node_phase(grid, k, mode));
    sum += coeff * std::sin(mode * u);
  }
  return 2.0 * sum / n;
}

DiffMatrices build_diff_matrices(const GridSpec& grid) {
  const int n = grid.n();
  const int m = grid.node_count();
  const double wave = kPi / (2.0 * grid.half_width());

  // sines(mode-1, i) = sin(mode pi (k_i + N/2)/N), cosines likewise.
  DenseMatrix sines(n - 1, m), cosines(n - 1, m);
  for (int mode = 1; mode < n; ++mode)
    for (int i = 0; i < m; ++i) {
      const double phase = node_phase(grid, grid.k_min() + i, mode);
      sines(mode - 1, i) = std::sin(phase);
      cosines(mode - 1, i) = std::cos(phase);
    }

  DiffMatrices out{DenseMatrix(m, m), DenseMatrix(m, m)};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      double first = 0.0, second = 0.0;
      for (int mode = 1; mode < n; ++mode) {
        const double q = mode * wave;
        first += sines(mode - 1, a) * q * cosines(mode - 1, b);
        second -= sines(mode - 1, a) * q * q * sines(mode - 1, b);
      }
      out.d1(a, b) = 2.0 * first / n;
      out.d2(a, b) = 2.0 * second / n;
    }
  // d2 is symmetric by construction; enforce it bitwise.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < a; ++b) {
      const double sym = 0.5 * (out.d2(a, b) + out.d2(b, a));
      out.d2(a, b) = out.d2(b, a) = sym;
    }
  return out;
}

std::vector<double> d2_diagonal(const GridSpec& grid) {
  const int n = grid.n();
  const double wave = kPi / (2.0 * grid.half_width());
  std::vector<double> diag(grid.node_count());
  for (int i = 0; i < grid.node_count(); ++i) {
    double s = 0.0;
    for (int mode = 1; mode < n; ++mode) {
      const double sn = std::sin(node_phase(grid, grid.k_min() + i, mode));
      s -= sn * sn * (mode * wave) * (mode * wave);
    }
    diag[i] = 2.0 * s / n;
  }
  return diag;
}

}  // namespace lsfc
