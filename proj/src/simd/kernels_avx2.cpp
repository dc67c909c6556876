// AVX2 + FMA kernels. This file is compiled with -mavx2 -mfma and must only
// be entered after a runtime CPU check.

#include <immintrin.h>

#include "lsfc/simd/kernels.hpp"

namespace lsfc::simd {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
  __m256d a2 = _mm256_setzero_pd(), a3 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
    a2 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 8), _mm256_loadu_pd(y + i + 8), a2);
    a3 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 12), _mm256_loadu_pd(y + i + 12), a3);
  }
  for (; i + 4 <= n; i += 4) a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
  double s = hsum(_mm256_add_pd(_mm256_add_pd(a0, a1), _mm256_add_pd(a2, a3)));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    _mm256_storeu_pd(y + i + 4, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4)));
  }
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(a, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= alpha;
}

void multiply(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

// inner == 1: each output is a row-vector dot product along the line.
void contract_last_axis(const double* mat, std::size_t m, std::size_t outer, const double* in, double* out) {
  for (std::size_t o = 0; o < outer; ++o) {
    const double* src = in + o * m;
    double* dst = out + o * m;
    for (std::size_t j = 0; j < m; ++j) dst[j] += dot(mat + j * m, src, m);
  }
}

void contract_axis(const double* mat, std::size_t m, std::size_t outer, std::size_t inner, const double* in,
                   double* out) {
  if (inner < 4) {
    if (inner == 1) return contract_last_axis(mat, m, outer, in, out);
    const std::size_t block = m * inner;
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t t = 0; t < inner; ++t) {
          double s = 0.0;
          for (std::size_t k = 0; k < m; ++k) s += mat[j * m + k] * in[o * block + k * inner + t];
          out[o * block + j * inner + t] += s;
        }
    return;
  }
  const std::size_t block = m * inner;
  for (std::size_t o = 0; o < outer; ++o) {
    const double* src = in + o * block;
    double* dst = out + o * block;
    for (std::size_t j = 0; j < m; ++j) {
      const double* row = mat + j * m;
      double* d = dst + j * inner;
      std::size_t t = 0;
      for (; t + 16 <= inner; t += 16) {
        __m256d a0 = _mm256_loadu_pd(d + t), a1 = _mm256_loadu_pd(d + t + 4);
        __m256d a2 = _mm256_loadu_pd(d + t + 8), a3 = _mm256_loadu_pd(d + t + 12);
        for (std::size_t k = 0; k < m; ++k) {
          const __m256d c = _mm256_broadcast_sd(row + k);
          const double* s = src + k * inner + t;
          a0 = _mm256_fmadd_pd(c, _mm256_loadu_pd(s), a0);
          a1 = _mm256_fmadd_pd(c, _mm256_loadu_pd(s + 4), a1);
          a2 = _mm256_fmadd_pd(c, _mm256_loadu_pd(s + 8), a2);
          a3 = _mm256_fmadd_pd(c, _mm256_loadu_pd(s + 12), a3);
        }
        _mm256_storeu_pd(d + t, a0);
        _mm256_storeu_pd(d + t + 4, a1);
        _mm256_storeu_pd(d + t + 8, a2);
        _mm256_storeu_pd(d + t + 12, a3);
      }
      for (; t + 4 <= inner; t += 4) {
        __m256d a = _mm256_loadu_pd(d + t);
        for (std::size_t k = 0; k < m; ++k)
          a = _mm256_fmadd_pd(_mm256_broadcast_sd(row + k), _mm256_loadu_pd(src + k * inner + t), a);
        _mm256_storeu_pd(d + t, a);
      }
      for (; t < inner; ++t) {
        double s = d[t];
        for (std::size_t k = 0; k < m; ++k) s += row[k] * src[k * inner + t];
        d[t] = s;
      }
    }
  }
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{Isa::Avx2, dot, axpy, scale, multiply, contract_axis};
  return table;
}

}  // namespace lsfc::simd
