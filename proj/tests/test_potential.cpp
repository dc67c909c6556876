#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lsfc/cli.hpp"
#include "lsfc/error.hpp"
#include "lsfc/potential.hpp"

using namespace lsfc;

namespace {

double at(const PolynomialPotential& p, std::vector<double> x) { return eval(p, x); }

PolynomialPotential parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_potential(in);
}

}  // namespace

TEST_CASE("evaluation of the built-in models") {
  DenseMatrix zero1(1, 1);
  CHECK(at(make_coupled_harmonic(1, zero1), {2.0}) == 2.0);
  CHECK(at(make_coupled_harmonic(1, zero1), {3.0}) == 4.5);
  CHECK(at(make_pullen_edmonds(1.0), {1.0, 0.0}) == 0.5);
  CHECK(at(make_pullen_edmonds(1.0), {1.0, 1.0}) == 2.0);
  CHECK(at(make_pe_radial_effective(1.0), {1.0, 0.0}) == doctest::Approx(0.625));
  CHECK(at(make_pe_radial_effective(1.0), {1.0, 1.0}) == doctest::Approx(1.5));
  CHECK(at(make_quartic_pair(1.0), {1.0, 1.0}) == doctest::Approx(5.0));
  CHECK(at(make_quartic_pair(0.0), {0.3, -1.2}) == doctest::Approx(0.5 * (0.09 + 1.44)));
  CHECK(at(make_witwit_quartic(0.0), {1.0, 1.0, 1.0}) == doctest::Approx(1.5));
  CHECK(at(make_witwit_quartic(1.0), {1.0, 0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(at(make_sextic(3), {0.0, 0.0, 0.0}) == 0.0);
  CHECK(at(make_sextic(3), {1.0, 1.0, 1.0}) == doctest::Approx(12.0));
}

TEST_CASE("witwit coupling constants") {
  // 1/2 r^2 + lambda (x^4/2 + y^4/3 + z^4/6 + x^2 y^2 + y^2 z^2 / 2 + x^2 z^2)
  const auto p = make_witwit_quartic(2.0);
  const double x = 0.3, y = -0.7, z = 1.1;
  const double expect = 0.5 * (x * x + y * y + z * z) +
                        2.0 * (x * x * x * x / 2 + y * y * y * y / 3 + z * z * z * z / 6 + x * x * y * y +
                               y * y * z * z / 2 + x * x * z * z);
  CHECK(at(p, {x, y, z}) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("coupled harmonic") {
  DenseMatrix v(4, 4, 1.0 / 3.0);
  for (int i = 0; i < 4; ++i) v(i, i) = 0.0;
  const auto p = make_coupled_harmonic(4, v);
  const std::vector<double> x = {0.1, -0.2, 0.3, 0.4};
  double expect = 0.0;
  for (int i = 0; i < 4; ++i) {
    expect += 0.5 * x[i] * x[i];
    for (int j = 0; j < 4; ++j) expect += 0.5 * v(i, j) * x[i] * x[j];
  }
  CHECK(at(p, x) == doctest::Approx(expect).epsilon(1e-14));

  DenseMatrix bad(2, 2);
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(make_coupled_harmonic(2, bad), DomainError);
}

TEST_CASE("coupled harmonic is equivariant under axis permutation") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  DenseMatrix v(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) v(i, j) = v(j, i) = u(rng);
  const int perm[3] = {2, 0, 1};
  DenseMatrix w(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w(i, j) = v(perm[i], perm[j]);
  const auto a = make_coupled_harmonic(3, v), b = make_coupled_harmonic(3, w);
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> x = {u(rng), u(rng), u(rng)};
    const std::vector<double> y = {x[perm[0]], x[perm[1]], x[perm[2]]};
    CHECK(at(b, y) == doctest::Approx(at(a, x)).epsilon(1e-14));
  }
}

TEST_CASE("built-ins vanish at the origin and are bounded below") {
  for (const auto& m : builtin_models()) {
    const auto p = make_builtin(m.name);
    const int d = p.dims();
    CHECK(at(p, std::vector<double>(d, 0.0)) == 0.0);
    std::vector<int> idx(d, 0);
    double lowest = 0.0;
    for (;;) {
      std::vector<double> x(d);
      for (int a = 0; a < d; ++a) x[a] = -5.0 + 0.5 * idx[a];
      lowest = std::min(lowest, at(p, x));
      int a = d - 1;
      while (a >= 0 && idx[a] == 20) idx[a--] = 0;
      if (a < 0) break;
      ++idx[a];
    }
    CHECK_MESSAGE(lowest > -1e-12, m.name);
  }
}

TEST_CASE("symmetries of the built-ins") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const auto pe = make_pullen_edmonds(0.7);
  const auto s3 = make_sextic(3), s4 = make_sextic(4);
  for (int t = 0; t < 50; ++t) {
    const double x = u(rng), y = u(rng), z = u(rng), w = u(rng);
    CHECK(at(pe, {x, y}) == doctest::Approx(at(pe, {y, x})).epsilon(1e-14));
    CHECK(at(s3, {x, y, z}) == doctest::Approx(at(s3, {z, x, y})).epsilon(1e-13));
    CHECK(at(s3, {x, y, z}) == doctest::Approx(at(s3, {y, x, z})).epsilon(1e-13));
    CHECK(at(s4, {x, y, z, w}) == doctest::Approx(at(s4, {w, z, x, y})).epsilon(1e-13));
  }
}

TEST_CASE("potential validation") {
  CHECK_THROWS_AS(eval(make_pullen_edmonds(1.0), std::vector<double>{1.0}), ShapeError);
  CHECK_THROWS_AS(PolynomialPotential(1, {{1.0, {7}}}), DomainError);
  CHECK_THROWS_AS(PolynomialPotential(2, {{1.0, {2}}}), ShapeError);
  CHECK_THROWS_AS(PolynomialPotential(1, {{1.0, {-1}}}), DomainError);
  CHECK_THROWS_AS(PolynomialPotential(1, {{1.0, {2}}}, {0.0}), DomainError);
  CHECK_THROWS_AS(make_builtin("nope"), LookupError);
  CHECK_THROWS_AS(make_builtin("sextic3d", 1.0), DomainError);
  CHECK(eval(make_builtin("pe", 0.0), std::vector<double>{1.0, 1.0}) == 1.0);
}

TEST_CASE("compose_linear expands V(Ax) exactly") {
  const auto p = make_sextic(3);
  DenseMatrix a(3, 3);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = u(rng);
  const auto q = p.compose_linear(a);
  CHECK(q.degree() == 6);
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> x = {u(rng), u(rng), u(rng)};
    const auto ax = a * std::span<const double>(x);
    CHECK(at(q, x) == doctest::Approx(at(p, ax)).epsilon(1e-11));
  }
}

TEST_CASE("potential file format") {
  SUBCASE("one dimensional") {
    const auto p = parse_text("0.5 2\n");
    CHECK(p.dims() == 1);
    CHECK(at(p, {2.0}) == 2.0);
  }
  SUBCASE("Pullen-Edmonds terms with comments") {
    const auto p = parse_text("# PE, kappa = 1\n0.5 2 0\n\n0.5 0 2   # y^2\n1 2 2\n");
    CHECK(p.coefficients() == make_pullen_edmonds(1.0).coefficients());
  }
  SUBCASE("errors carry line numbers") {
    try {
      parse_text("0.5 2 0\n0.5 0 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    try {
      parse_text("0.5 2 0\n# c\n1 2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_text(""), ParseError);
    CHECK_THROWS_AS(parse_text("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse_text("abc 2\n"), ParseError);
    CHECK_THROWS_AS(parse_text("1.0\n"), ParseError);
    CHECK_THROWS_AS(parse_text("1.0 -2\n"), ParseError);
    CHECK_THROWS_AS(parse_text("1.0 8\n"), ParseError);
  }
  SUBCASE("from a file") {
    const std::string path = "potential_file_test.txt";
    std::ofstream(path) << "0.5 2\n0.1 4\n";
    const auto p = parse_potential_file(path);
    CHECK(at(p, {1.0}) == doctest::Approx(0.6));
    std::remove(path.c_str());
    CHECK_THROWS_AS(parse_potential_file("does/not/exist.txt"), ParseError);
  }
}
