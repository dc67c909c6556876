#include "lsfc/transforms.hpp"

#include <cmath>
#include <string>

#include "lsfc/error.hpp"

namespace lsfc {

TransformParams TransformParams::identity(int dims, double half_width) {
  TransformParams p;
  p.half_width = half_width;
  p.axis_scales.assign(dims, 1.0);
  return p;
}

void TransformParams::validate(int dims) const {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("transform: half-width must be positive");
  if (!axis_scales.empty() && static_cast<int>(axis_scales.size()) != dims)
    throw ShapeError("transform: expected " + std::to_string(dims) + " axis scales");
  for (double s : axis_scales)
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("transform: axis scales must be positive");
  if (static_cast<int>(angles.size()) > dims * (dims - 1) / 2)
    throw DomainError("transform: too many rotation angles for D = " + std::to_string(dims));
  for (double a : angles)
    if (!std::isfinite(a)) throw DomainError("transform: non-finite rotation angle");
}

std::pair<int, int> givens_plane(int position, int dims) {
  int p = position;
  for (int i = 0; i < dims; ++i)
    for (int j = i + 1; j < dims; ++j)
      if (p-- == 0) return {i, j};
  throw DomainError("givens_plane: position " + std::to_string(position) + " out of range");
}

DenseMatrix rotation_matrix(const std::vector<double>& angles, int dims) {
  if (static_cast<int>(angles.size()) > dims * (dims - 1) / 2)
    throw DomainError("rotation_matrix: " + std::to_string(angles.size()) + " angles exceed D(D-1)/2 for D = " +
                      std::to_string(dims));
  DenseMatrix r = DenseMatrix::identity(dims);
  for (std::size_t pos = 0; pos < angles.size(); ++pos) {
    if (angles[pos] == 0.0) continue;
    const auto [i, j] = givens_plane(static_cast<int>(pos), dims);
    const double c = std::cos(angles[pos]), s = std::sin(angles[pos]);
    // r <- r G, with G acting as x_i' = c x_i - s x_j, x_j' = s x_i + c x_j.
    for (int row = 0; row < dims; ++row) {
      const double ri = r(row, i), rj = r(row, j);
      r(row, i) = c * ri + s * rj;
      r(row, j) = -s * ri + c * rj;
    }
  }
  return r;
}

DenseMatrix substitution_matrix(const TransformParams& params, int dims) {
  params.validate(dims);
  DenseMatrix a = rotation_matrix(params.angles, dims);
  for (int row = 0; row < dims; ++row)
    for (int col = 0; col < dims; ++col) a(row, col) /= params.axis_scale(col);
  return a;
}

DenseMatrix inverse_substitution_matrix(const TransformParams& params, int dims) {
  params.validate(dims);
  DenseMatrix a = rotation_matrix(params.angles, dims).transposed();
  for (int row = 0; row < dims; ++row)
    for (int col = 0; col < dims; ++col) a(row, col) *= params.axis_scale(row);
  return a;
}

TransformedProblem transformed_problem(const PolynomialPotential& pot, const TransformParams& params) {
  const int dims = pot.dims();
  params.validate(dims);
  const auto& masses = pot.masses();
  bool rotated = false;
  for (double a : params.angles) rotated = rotated || a != 0.0;
  if (rotated)
    for (double m : masses)
      if (m != masses.front())
        throw DomainError("transform: rotations require equal masses on every axis");

  TransformedProblem out{pot, std::vector<double>(dims)};
  for (int i = 0; i < dims; ++i) {
    const double s = params.axis_scale(i);
    out.kinetic_prefactors[i] = s * s / (2.0 * masses[i]);
  }
  bool trivial = !rotated;
  for (int i = 0; i < dims; ++i) trivial = trivial && params.axis_scale(i) == 1.0;
  if (!trivial) out.potential = pot.compose_linear(substitution_matrix(params, dims));
  return out;
}

}  // namespace lsfc
