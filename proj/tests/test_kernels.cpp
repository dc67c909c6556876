#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "lsfc/error.hpp"
#include "lsfc/hamiltonian.hpp"
#include "lsfc/simd/kernels.hpp"

using namespace lsfc;
using simd::Isa;

namespace {

std::vector<double> random(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_CASE("scalar kernels are always available") {
  CHECK(simd::isa_available(Isa::Scalar));
  CHECK(simd::kernels_for(Isa::Scalar).isa == Isa::Scalar);
  CHECK(simd::isa_name(Isa::Avx2) == "avx2");
  const auto isas = simd::available_isas();
  CHECK(std::find(isas.begin(), isas.end(), simd::active_kernels().isa) != isas.end());
  if (!simd::isa_available(Isa::Avx2)) CHECK_THROWS_AS(simd::kernels_for(Isa::Avx2), DomainError);
}

TEST_CASE("vector kernels agree with the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  for (Isa isa : simd::available_isas()) {
    const auto& k = simd::kernels_for(isa);
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 17u, 33u, 1000u, 4099u}) {
      const auto x = random(n, 1 + n), y = random(n, 2 + n);
      CAPTURE(n);
      const double d_ref = ref.dot(x.data(), y.data(), n), d = k.dot(x.data(), y.data(), n);
      CHECK(std::abs(d - d_ref) <= 1e-12 * std::max(1.0, static_cast<double>(n)));

      auto y1 = y, y2 = y;
      ref.axpy(0.37, x.data(), y1.data(), n);
      k.axpy(0.37, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-15);

      auto s1 = x, s2 = x;
      ref.scale(-2.5, s1.data(), n);
      k.scale(-2.5, s2.data(), n);
      CHECK(s1 == s2);

      std::vector<double> m1(n), m2(n);
      ref.multiply(x.data(), y.data(), m1.data(), n);
      k.multiply(x.data(), y.data(), m2.data(), n);
      CHECK(m1 == m2);
    }
  }
}

TEST_CASE("axis contraction agrees with the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  for (Isa isa : simd::available_isas()) {
    const auto& k = simd::kernels_for(isa);
    for (std::size_t m : {3u, 5u, 9u, 19u})
      for (auto [outer, inner] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 19}, {19, 1}, {7, 5}, {3, 64}, {5, 361}}) {
        const auto mat = random(m * m, m);
        const auto in = random(outer * m * inner, m + outer + inner);
        auto out_ref = random(outer * m * inner, 99), out = out_ref;
        ref.contract_axis(mat.data(), m, outer, inner, in.data(), out_ref.data());
        k.contract_axis(mat.data(), m, outer, inner, in.data(), out.data());
        // brute force
        auto brute = random(outer * m * inner, 99);
        for (std::size_t o = 0; o < outer; ++o)
          for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < inner; ++t) {
              double s = 0.0;
              for (std::size_t q = 0; q < m; ++q) s += mat[j * m + q] * in[(o * m + q) * inner + t];
              brute[(o * m + j) * inner + t] += s;
            }
        for (std::size_t i = 0; i < out.size(); ++i) {
          CHECK(std::abs(out[i] - out_ref[i]) <= 1e-12 * std::max(1.0, max_abs(out_ref)));
          CHECK(std::abs(out_ref[i] - brute[i]) <= 1e-12 * std::max(1.0, max_abs(brute)));
        }
      }
  }
}

TEST_CASE("operator apply agrees across kernel sets") {
  const auto pot = make_witwit_quartic(1e6);
  TransformParams p = TransformParams::identity(3, 0.33);
  p.axis_scales = {1.0, 1.017, 1.0};
  p.angles = {0.48, 0.785};
  const auto op = build(pot, p, 20);
  const auto v = random(op.size(), 5);
  std::vector<double> ref(op.size());
  op.apply(v, ref, simd::scalar_kernels());
  const double scale = max_abs(ref);
  for (Isa isa : simd::available_isas()) {
    std::vector<double> out(op.size());
    op.apply(v, out, simd::kernels_for(isa));
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(std::abs(out[i] - ref[i]) <= 1e-12 * scale);
  }
}
