#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lsfc/error.hpp"
#include "lsfc/grid_basis.hpp"
#include "oracles.hpp"

using namespace lsfc;

TEST_CASE("grid nodes are symmetric and interior") {
  const GridSpec g(8, 1.0);
  CHECK(g.node_count() == 7);
  CHECK(g.spacing() * g.n() == doctest::Approx(2.0).epsilon(1e-15));
  REQUIRE(g.nodes().size() == 7);
  for (int k = g.k_min(); k <= g.k_max(); ++k) {
    CHECK(g.node(-k) == -g.node(k));
    CHECK(std::abs(g.node(k)) < g.half_width());
  }
  CHECK(g.nodes()[0] == g.node(-3));
}

TEST_CASE("grid rejects bad N and L") {
  CHECK_THROWS_AS(GridSpec(7, 1.0), DomainError);
  CHECK_THROWS_AS(GridSpec(2, 1.0), DomainError);
  CHECK_THROWS_AS(GridSpec(8, 0.0), DomainError);
  CHECK_THROWS_AS(GridSpec(8, -1.0), DomainError);
}

TEST_CASE("lsf_eval delta property") {
  for (int n : {4, 8, 20, 64}) {
    const GridSpec g(n, 1.7);
    for (int k = g.k_min(); k <= g.k_max(); ++k)
      for (int j = g.k_min(); j <= g.k_max(); ++j)
        CHECK(std::abs(lsf_eval(g, k, g.node(j)) - (k == j ? 1.0 : 0.0)) < 1e-12);
  }
}

TEST_CASE("lsf_eval matches the sine series summed directly") {
  const GridSpec g(8, 1.0);
  CHECK(lsf_eval(g, 0, 0.0) == doctest::Approx(1.0));
  CHECK(std::abs(lsf_eval(g, 1, g.node(2))) < 1e-14);
  for (double x : {0.13, -0.77, 0.5, 0.999})
    for (int k = g.k_min(); k <= g.k_max(); ++k)
      CHECK(lsf_eval(g, k, x) == doctest::Approx(oracle::lsf_series(8, 1.0, k, x)).epsilon(1e-13));
}

TEST_CASE("closed form agrees with the series away from singular points") {
  const GridSpec g(12, 2.5);
  for (double x : {0.1234, -1.1, 2.2, -2.4})
    for (int k = g.k_min(); k <= g.k_max(); ++k)
      CHECK(lsf_eval_closed_form(g, k, x) == doctest::Approx(lsf_eval(g, k, x)).epsilon(1e-10));
}

TEST_CASE("lsf_eval domain errors") {
  const GridSpec g(8, 1.0);
  CHECK_THROWS_AS(lsf_eval(g, 4, 0.0), DomainError);
  CHECK_THROWS_AS(lsf_eval(g, -4, 0.0), DomainError);
  CHECK_THROWS_AS(lsf_eval(g, 0, 1.0), DomainError);
  CHECK_THROWS_AS(lsf_eval(g, 0, -1.5), DomainError);
}

TEST_CASE("LSFs are orthogonal with weight h") {
  const GridSpec g(10, 1.3);
  const int panels = 20000;
  const double l = g.half_width(), dx = 2 * l / panels;
  for (int k = g.k_min(); k <= g.k_max(); ++k)
    for (int j = k; j <= g.k_max(); ++j) {
      double sum = 0.0;  // integrand vanishes at both walls
      for (int p = 1; p < panels; ++p) {
        const double x = -l + p * dx;
        sum += lsf_eval(g, k, x) * lsf_eval(g, j, x);
      }
      CHECK(std::abs(sum * dx - (k == j ? g.spacing() : 0.0)) < 1e-6 * g.spacing());
    }
}

TEST_CASE("interpolation") {
  SUBCASE("constant function at nodes") {
    const GridSpec g(8, 1.0);
    const std::vector<double> ones(7, 1.0);
    for (int k = g.k_min(); k <= g.k_max(); ++k) CHECK(interpolate(g, ones, g.node(k)) == doctest::Approx(1.0));
  }
  SUBCASE("box eigenfunction is reproduced") {
    const GridSpec g(16, 1.0);
    auto f = [&](double x) { return std::cos(std::numbers::pi * x / 2.0); };  // sin(pi (x + L) / 2L)
    std::vector<double> s;
    for (double x : g.nodes()) s.push_back(f(x));
    CHECK(interpolate(g, s, 0.3) == doctest::Approx(f(0.3)).epsilon(1e-11));
  }
  SUBCASE("error for a Gaussian decreases with N") {
    auto err = [](int n) {
      const GridSpec g(n, 6.0);
      std::vector<double> s;
      for (double x : g.nodes()) s.push_back(std::exp(-x * x));
      return std::abs(interpolate(g, s, 0.3) - std::exp(-0.09));
    };
    CHECK(err(32) < 1e-6);
    CHECK(err(32) < err(8));
  }
  SUBCASE("sample count mismatch") {
    const GridSpec g(8, 1.0);
    CHECK_THROWS_AS(interpolate(g, std::vector<double>(6, 0.0), 0.1), ShapeError);
  }
}

TEST_CASE("derivative matrices against finite differences") {
  const GridSpec g(8, 1.0);
  const DiffMatrices d = build_diff_matrices(g);
  const double step = 1e-3;
  double max_d1 = d.d1.max_abs();
  for (int k = g.k_min(); k <= g.k_max(); ++k)
    for (int j = g.k_min(); j <= g.k_max(); ++j) {
      auto s = [&](double x) { return oracle::lsf_series(8, 1.0, k, x); };
      const std::size_t r = k - g.k_min(), c = j - g.k_min();
      CHECK(std::abs(d.d1(r, c) - oracle::first_derivative(s, g.node(j), step)) < 1e-6 * max_d1);
      CHECK(d.d2(r, c) == doctest::Approx(oracle::second_derivative(s, g.node(j), step)).epsilon(1e-6));
    }
  auto s0 = [&](double x) { return lsf_eval(g, 0, x); };
  const double fd = (s0(1e-5) - 2 * s0(0.0) + s0(-1e-5)) / 1e-10;
  CHECK(d.d2(3, 3) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("d2 is symmetric with negative diagonal") {
  for (int n : {4, 10, 30}) {
    const DiffMatrices d = build_diff_matrices(GridSpec(n, 3.0));
    for (std::size_t i = 0; i < d.d2.rows(); ++i) {
      CHECK(d.d2(i, i) < 0.0);
      for (std::size_t j = 0; j < d.d2.cols(); ++j) CHECK(d.d2(i, j) == d.d2(j, i));
    }
    const auto diag = d2_diagonal(GridSpec(n, 3.0));
    for (std::size_t i = 0; i < diag.size(); ++i) CHECK(diag[i] == doctest::Approx(d.d2(i, i)).epsilon(1e-14));
  }
}

TEST_CASE("d1 is antisymmetric under point reflection") {
  const GridSpec g(10, 2.0);
  const DiffMatrices d = build_diff_matrices(g);
  const std::size_t m = d.d1.rows();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) CHECK(d.d1(i, j) == doctest::Approx(-d.d1(m - 1 - i, m - 1 - j)).epsilon(1e-12));
  CHECK(std::abs(d.d1(m / 2, m / 2)) < 1e-12);  // centre node
}

TEST_CASE("derivative matrices scale as 1/sigma and 1/sigma^2") {
  const DiffMatrices a = build_diff_matrices(GridSpec(12, 1.5));
  const double sigma = 2.75;
  const DiffMatrices b = build_diff_matrices(GridSpec(12, 1.5 * sigma));
  for (std::size_t i = 0; i < a.d1.rows(); ++i)
    for (std::size_t j = 0; j < a.d1.cols(); ++j) {
      CHECK(b.d1(i, j) == doctest::Approx(a.d1(i, j) / sigma).epsilon(1e-13));
      CHECK(b.d2(i, j) == doctest::Approx(a.d2(i, j) / (sigma * sigma)).epsilon(1e-13));
    }
}

TEST_CASE("particle in a box levels approach pi^2 n^2 / 8 L^2") {
  const double l = 1.0;
  const GridSpec g(40, l);
  DenseMatrix t = build_diff_matrices(g).d2;
  t *= -0.5;
  const auto e = symmetric_eigen(t, false).values;
  for (int n = 1; n <= 3; ++n) {
    const double exact = std::numbers::pi * std::numbers::pi * n * n / (8 * l * l);
    CHECK(e[n - 1] == doctest::Approx(exact).epsilon(1e-10));
  }
}
