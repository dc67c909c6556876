#pragma once

#include <cstdint>
#include <vector>

#include "lsfc/dense.hpp"
#include "lsfc/hamiltonian.hpp"

namespace lsfc {

struct EigenRequest {
  int how_many = 1;
  double residual_tolerance = 1e-10;
  /// Krylov basis size per restart cycle; 0 picks a size from how_many.
  int max_lanczos_dimension = 0;
  /// Number of start vectors. Must cover the largest eigenvalue
  /// multiplicity among the wanted levels.
  int block_size = 4;
  /// Budget of operator applications.
  std::int64_t max_iterations = 200'000;
  std::uint64_t seed = 0x5eed;
  bool want_vectors = false;
};

struct EigenResult {
  std::vector<double> eigenvalues;     // ascending
  std::vector<double> residual_norms;  // ||H v - lambda v|| with ||v|| = 1
  std::int64_t iterations = 0;         // operator applications
  int restarts = 0;
  std::vector<std::vector<double>> eigenvectors;  // empty unless requested
};

/// Lowest eigenpairs of a symmetric operator by thick-restart Lanczos with
/// full reorthogonalization, started from `block_size` pseudo-random vectors.
/// Iterates until how_many + 2 Ritz pairs satisfy
/// ||H v - theta v|| <= tol * max(1, |theta|), then reports the lowest
/// how_many. Throws ConvergenceError when the budget runs out.
EigenResult lowest_eigenpairs(const HamiltonianOperator& op, const EigenRequest& req);

/// All eigenvalues of a symmetric matrix (dimension <= 4096), ascending.
std::vector<double> dense_eigen(const DenseMatrix& matrix);

}  // namespace lsfc
