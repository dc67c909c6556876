#include "lsfc/simd/kernels.hpp"

namespace lsfc::simd {

namespace {

double dot(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void multiply(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void contract_axis(const double* mat, std::size_t m, std::size_t outer, std::size_t inner, const double* in,
                   double* out) {
  const std::size_t block = m * inner;
  for (std::size_t o = 0; o < outer; ++o) {
    const double* src = in + o * block;
    double* dst = out + o * block;
    for (std::size_t j = 0; j < m; ++j) {
      const double* row = mat + j * m;
      double* d = dst + j * inner;
      for (std::size_t k = 0; k < m; ++k) {
        const double c = row[k];
        const double* s = src + k * inner;
        for (std::size_t t = 0; t < inner; ++t) d[t] += c * s[t];
      }
    }
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, dot, axpy, scale, multiply, contract_axis};
  return table;
}

}  // namespace lsfc::simd
