#include "lsfc/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lsfc/error.hpp"

namespace lsfc {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

PolynomialPotential::PolynomialPotential(int dims, std::vector<Monomial> terms, std::vector<double> masses,
                                         int max_degree)
    : dims_(dims), terms_(std::move(terms)), masses_(std::move(masses)), max_degree_(max_degree) {
  if (dims_ < 1) throw DomainError("potential: dimension must be >= 1");
  if (masses_.empty()) masses_.assign(dims_, 1.0);
  if (static_cast<int>(masses_.size()) != dims_) throw ShapeError("potential: one mass per dimension required");
  for (double m : masses_)
    if (!(m > 0.0)) throw DomainError("potential: masses must be positive");
  for (const Monomial& t : terms_) {
    if (static_cast<int>(t.exponents.size()) != dims_)
      throw ShapeError("potential: monomial exponent vector has wrong length");
    for (int e : t.exponents)
      if (e < 0) throw DomainError("potential: negative exponent");
    if (t.degree() > max_degree_)
      throw DomainError("potential: monomial degree " + std::to_string(t.degree()) + " exceeds maximum " +
                        std::to_string(max_degree_));
    if (!std::isfinite(t.coefficient)) throw DomainError("potential: non-finite coefficient");
  }
}

int PolynomialPotential::degree() const {
  int d = 0;
  for (const Monomial& t : terms_) d = std::max(d, t.degree());
  return d;
}

double PolynomialPotential::operator()(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != dims_)
    throw ShapeError("potential: point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(dims_));
  double v = 0.0;
  for (const Monomial& t : terms_) {
    double p = t.coefficient;
    for (int i = 0; i < dims_; ++i)
      for (int e = 0; e < t.exponents[i]; ++e) p *= point[i];
    v += p;
  }
  return v;
}

std::map<std::vector<int>, double> PolynomialPotential::coefficients() const {
  std::map<std::vector<int>, double> c;
  for (const Monomial& t : terms_) c[t.exponents] += t.coefficient;
  return c;
}

PolynomialPotential PolynomialPotential::collected(double rel_tol) const {
  const auto c = coefficients();
  double scale = 0.0;
  for (const auto& [e, v] : c) scale = std::max(scale, std::abs(v));
  std::vector<Monomial> terms;
  for (const auto& [e, v] : c)
    if (v != 0.0 && std::abs(v) > rel_tol * scale) terms.push_back({v, e});
  return PolynomialPotential(dims_, std::move(terms), masses_, max_degree_);
}

PolynomialPotential PolynomialPotential::compose_linear(const DenseMatrix& a) const {
  if (a.rows() != static_cast<std::size_t>(dims_) || a.cols() != static_cast<std::size_t>(dims_))
    throw ShapeError("compose_linear: matrix must be D x D");
  using Poly = std::map<std::vector<int>, double>;
  auto multiply = [&](const Poly& p, const Poly& q) {
    Poly r;
    for (const auto& [ep, cp] : p)
      for (const auto& [eq, cq] : q) {
        std::vector<int> e(dims_);
        for (int i = 0; i < dims_; ++i) e[i] = ep[i] + eq[i];
        r[e] += cp * cq;
      }
    return r;
  };
  // Row i of A as the linear form y_i = sum_j a_ij x_j.
  std::vector<Poly> linear(dims_);
  for (int i = 0; i < dims_; ++i)
    for (int j = 0; j < dims_; ++j)
      if (a(i, j) != 0.0) {
        std::vector<int> e(dims_, 0);
        e[j] = 1;
        linear[i][e] = a(i, j);
      }

  Poly total;
  for (const Monomial& t : terms_) {
    Poly p{{std::vector<int>(dims_, 0), t.coefficient}};
    for (int i = 0; i < dims_; ++i)
      for (int e = 0; e < t.exponents[i]; ++e) p = multiply(p, linear[i]);
    for (const auto& [e, c] : p) total[e] += c;
  }
  std::vector<Monomial> terms;
  for (const auto& [e, c] : total)
    if (c != 0.0) terms.push_back({c, e});
  return PolynomialPotential(dims_, std::move(terms), masses_, max_degree_);
}

double eval(const PolynomialPotential& pot, std::span<const double> point) { return pot(point); }

namespace {

std::vector<int> unit_exponents(int dims, std::initializer_list<std::pair<int, int>> powers) {
  std::vector<int> e(dims, 0);
  for (auto [axis, power] : powers) e[axis] += power;
  return e;
}

}  // namespace

PolynomialPotential make_coupled_harmonic(int dims, const DenseMatrix& coupling) {
  if (coupling.rows() != static_cast<std::size_t>(dims) || coupling.cols() != static_cast<std::size_t>(dims))
    throw ShapeError("coupled harmonic: coupling must be D x D");
  for (int i = 0; i < dims; ++i)
    for (int j = 0; j < i; ++j)
      if (coupling(i, j) != coupling(j, i)) throw DomainError("coupled harmonic: coupling matrix is not symmetric");
  std::vector<Monomial> terms;
  for (int i = 0; i < dims; ++i) {
    const double c = 0.5 + 0.5 * coupling(i, i);
    if (c != 0.0) terms.push_back({c, unit_exponents(dims, {{i, 2}})});
    for (int j = i + 1; j < dims; ++j)
      if (coupling(i, j) != 0.0) terms.push_back({coupling(i, j), unit_exponents(dims, {{i, 1}, {j, 1}})});
  }
  return PolynomialPotential(dims, std::move(terms));
}

PolynomialPotential make_pullen_edmonds(double kappa) {
  return PolynomialPotential(2, {{0.5, {2, 0}}, {0.5, {0, 2}}, {kappa, {2, 2}}});
}

PolynomialPotential make_pe_radial_effective(double kappa) {
  return PolynomialPotential(
      2, {{0.5, {2, 0}}, {0.5, {0, 2}}, {kappa / 8.0, {4, 0}}, {kappa / 4.0, {2, 2}}, {kappa / 8.0, {0, 4}}});
}

PolynomialPotential make_quartic_pair(double lambda) {
  // c40 = c04 = 1, c22 = 2; unit masses and frequencies.
  return PolynomialPotential(2, {{0.5, {2, 0}}, {0.5, {0, 2}}, {lambda, {4, 0}}, {lambda, {0, 4}},
                                 {2.0 * lambda, {2, 2}}});
}

PolynomialPotential make_witwit_quartic(double lambda) {
  const double axx = 0.5, ayy = 1.0 / 3.0, azz = 1.0 / 6.0, axy = 0.5, axz = 0.5, ayz = 0.25;
  return PolynomialPotential(3, {{0.5, {2, 0, 0}},
                                 {0.5, {0, 2, 0}},
                                 {0.5, {0, 0, 2}},
                                 {lambda * axx, {4, 0, 0}},
                                 {lambda * ayy, {0, 4, 0}},
                                 {lambda * azz, {0, 0, 4}},
                                 {2.0 * lambda * axy, {2, 2, 0}},
                                 {2.0 * lambda * ayz, {0, 2, 2}},
                                 {2.0 * lambda * axz, {2, 0, 2}}});
}

PolynomialPotential make_sextic(int dims) {
  if (dims != 3 && dims != 4) throw DomainError("sextic model is defined for D = 3 or 4");
  std::vector<Monomial> terms;
  for (int i = 0; i < dims; ++i) {
    terms.push_back({0.5, unit_exponents(dims, {{i, 2}})});
    terms.push_back({2.0, unit_exponents(dims, {{i, 4}})});
    terms.push_back({0.5, unit_exponents(dims, {{i, 6}})});
    for (int j = i + 1; j < dims; ++j) terms.push_back({1.0, unit_exponents(dims, {{i, 1}, {j, 1}})});
  }
  return PolynomialPotential(dims, std::move(terms));
}

const std::vector<BuiltinModel>& builtin_models() {
  static const std::vector<BuiltinModel> models = {
      {"harmonic1d", "one harmonic oscillator", std::nullopt},
      {"harmonic3d", "three uncoupled harmonic oscillators", std::nullopt},
      {"harmonic4d", "four harmonic oscillators with v_ij = (1 - delta_ij)/3", std::nullopt},
      {"pe", "Pullen-Edmonds x^2 y^2 coupling (parameter kappa)", 1.0},
      {"pe_radial", "angular average of the Pullen-Edmonds coupling (parameter kappa)", 1.0},
      {"quartic_pair", "two quartic oscillators, c40 = c04 = 1, c22 = 2 (parameter lambda)", 1.0},
      {"witwit", "anisotropic three-dimensional quartic (parameter lambda)", 1.0e6},
      {"sextic3d", "three coupled sextic oscillators", std::nullopt},
      {"sextic4d", "four coupled sextic oscillators", std::nullopt},
  };
  return models;
}

PolynomialPotential make_builtin(std::string_view name, std::optional<double> parameter) {
  const auto& models = builtin_models();
  auto it = std::find_if(models.begin(), models.end(), [&](const BuiltinModel& m) { return m.name == name; });
  if (it == models.end()) throw LookupError("unknown built-in model '" + std::string(name) + "'");
  if (parameter && !it->default_parameter)
    throw DomainError("model '" + std::string(name) + "' takes no parameter");
  const double p = parameter.value_or(it->default_parameter.value_or(0.0));

  if (name == "harmonic1d") return make_coupled_harmonic(1, DenseMatrix(1, 1));
  if (name == "harmonic3d") return make_coupled_harmonic(3, DenseMatrix(3, 3));
  if (name == "harmonic4d") {
    DenseMatrix v(4, 4, 1.0 / 3.0);
    for (int i = 0; i < 4; ++i) v(i, i) = 0.0;
    return make_coupled_harmonic(4, v);
  }
  if (name == "pe") return make_pullen_edmonds(p);
  if (name == "pe_radial") return make_pe_radial_effective(p);
  if (name == "quartic_pair") return make_quartic_pair(p);
  if (name == "witwit") return make_witwit_quartic(p);
  if (name == "sextic3d") return make_sextic(3);
  return make_sextic(4);
}

}  // namespace lsfc
