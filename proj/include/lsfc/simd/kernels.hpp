#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace lsfc::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Inner-loop kernels used by the operator apply and the Lanczos
/// orthogonalization. Every table computes the same mathematical result;
/// only the summation order and FMA contraction differ.
struct KernelTable {
  Isa isa;

  double (*dot)(const double* x, const double* y, std::size_t n);

  /// y += alpha x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  /// x *= alpha
  void (*scale)(double alpha, double* x, std::size_t n);

  /// out = a * b elementwise
  void (*multiply)(const double* a, const double* b, double* out, std::size_t n);

  /// Applies the m x m row-major matrix `mat` along the middle axis of an
  /// (outer, m, inner) array and accumulates:
  ///   out[o][j][t] += sum_k mat[j][k] in[o][k][t].
  void (*contract_axis)(const double* mat, std::size_t m, std::size_t outer, std::size_t inner, const double* in,
                        double* out);
};

const KernelTable& scalar_kernels();

/// True if the kernels for `isa` were compiled in and the CPU runs them.
bool isa_available(Isa isa);

std::vector<Isa> available_isas();

/// Throws lsfc::DomainError if the ISA is not available.
const KernelTable& kernels_for(Isa isa);

/// The table picked at first use: the widest available ISA, unless the
/// LSFC_SIMD environment variable names one ("scalar" or "avx2").
const KernelTable& active_kernels();

}  // namespace lsfc::simd
