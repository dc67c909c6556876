#pragma once

#include <utility>
#include <vector>

#include "lsfc/dense.hpp"
#include "lsfc/potential.hpp"

namespace lsfc {

/// Variational parameters: grid half-width L, per-axis scale factors
/// sigma_i (sigma_1 = 1 by convention) and Givens angles.
///
/// Angles are consumed in the fixed plane order (1,2), (1,3), ..., (1,D),
/// (2,3), ..., (D-1,D); a list shorter than D(D-1)/2 leaves the remaining
/// planes unrotated. For D = 3 the first two planes reproduce the two-angle
/// rotation x' = R x with
///
///   R = [[c1 c2, -s1, -c1 s2],
///        [s1 c2,  c1, -s1 s2],
///        [s2,     0,   c2   ]].
struct TransformParams {
  double half_width = 1.0;
  std::vector<double> axis_scales;  // empty means all ones
  std::vector<double> angles;

  static TransformParams identity(int dims, double half_width);

  /// Throws DomainError if L <= 0, any sigma <= 0, or any value is non-finite.
  void validate(int dims) const;
  double axis_scale(int axis) const { return axis_scales.empty() ? 1.0 : axis_scales[axis]; }
};

/// Plane (i, j), zero-based, for the given position in the fixed order.
std::pair<int, int> givens_plane(int position, int dims);

/// Product G(p_1, t_1) G(p_2, t_2) ... of plane rotations; orthogonal with
/// determinant +1.
DenseMatrix rotation_matrix(const std::vector<double>& angles, int dims);

struct TransformedProblem {
  PolynomialPotential potential;
  std::vector<double> kinetic_prefactors;  // sigma_i^2 / (2 m_i)
};

/// Applies the substitution x_orig = R S^{-1} x, S = diag(sigma). The
/// kinetic term becomes sum_i sigma_i^2 / (2 m_i) p_i^2 and the potential
/// V(R S^{-1} x); the rotation never touches the kinetic term.
TransformedProblem transformed_problem(const PolynomialPotential& pot, const TransformParams& params);

/// The matrix A = R S^{-1} of the substitution x_orig = A x.
DenseMatrix substitution_matrix(const TransformParams& params, int dims);

/// A^{-1} = S R^T.
DenseMatrix inverse_substitution_matrix(const TransformParams& params, int dims);

}  // namespace lsfc
