#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsfc/dense.hpp"

namespace lsfc {

/// Eigenvalues lambda_i of the coupling matrix v of the coupled harmonic model.
struct HarmonicSpectrum {
  std::vector<double> lambdas;
};

/// Cyclic Jacobi rotations for a small symmetric matrix.
SymmetricEigen jacobi_eigen(const DenseMatrix& a, double tolerance = 1e-15, int max_sweeps = 100);

HarmonicSpectrum harmonic_spectrum(const DenseMatrix& coupling);

/// The `count` lowest values of E = sum_i sqrt(1 + lambda_i) (n_i + 1/2),
/// with multiplicity. Throws DomainError if some 1 + lambda_i <= 0.
std::vector<double> exact_harmonic_levels(const DenseMatrix& coupling, int count);

/// Same enumeration with an explicit quantum-number cutoff n_i <= n_max.
std::vector<double> harmonic_levels_with_cutoff(const HarmonicSpectrum& spectrum, int count, int n_max);

/// Quantum-number cutoff that cannot miss any of the `count` lowest levels.
int harmonic_level_cutoff(const HarmonicSpectrum& spectrum, int count);

struct ReferenceRow {
  std::string model;
  std::optional<double> parameter;  // kappa or lambda
  std::string strategy;             // "scale", "aniso", "rot"; empty for exact/literature rows
  int n = 0;                        // grid N; 0 for exact or literature values
  std::string grid;                 // "9^4", "exact", "literature: ..."
  int level = 0;                    // counted with multiplicity
  double value = 0.0;
  std::string source;
};

struct ReferenceParameters {
  std::string model;
  double parameter = 0.0;
  std::string strategy;
  int n = 0;
  double half_width = 0.0;
  std::optional<double> beta, gamma, theta1, theta2;
  std::string source;
};

/// Benchmark rows for a built-in model id. Throws LookupError for unknown ids.
const std::vector<ReferenceRow>& reference_values(std::string_view model);

const std::vector<ReferenceParameters>& reference_parameters(std::string_view model);

/// Row for a collocation result, if one is tabulated.
std::optional<ReferenceRow> find_reference(std::string_view model, std::optional<double> parameter,
                                           std::string_view strategy, int n, int level);

/// Closed-form or high-precision row ("exact" grid) for the level, if any.
std::optional<ReferenceRow> find_exact_reference(std::string_view model, std::optional<double> parameter, int level);

}  // namespace lsfc
