#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsfc/dense.hpp"

namespace lsfc {

struct Monomial {
  double coefficient = 0.0;
  std::vector<int> exponents;

  int degree() const;
};

/// Polynomial V(x_1, ..., x_D) together with the particle masses that set
/// the kinetic term sum_i p_i^2 / 2 m_i.
class PolynomialPotential {
 public:
  static constexpr int kDefaultMaxDegree = 6;

  PolynomialPotential(int dims, std::vector<Monomial> terms, std::vector<double> masses = {},
                      int max_degree = kDefaultMaxDegree);

  int dims() const { return dims_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  const std::vector<double>& masses() const { return masses_; }
  int max_degree() const { return max_degree_; }
  int degree() const;

  double operator()(std::span<const double> point) const;

  /// Exact expansion of x -> V(A x). Like terms are merged.
  PolynomialPotential compose_linear(const DenseMatrix& a) const;

  /// Merges like terms and drops those with |c| <= rel_tol * max|c|.
  PolynomialPotential collected(double rel_tol = 0.0) const;

  /// Exponent vector -> coefficient after merging like terms.
  std::map<std::vector<int>, double> coefficients() const;

 private:
  int dims_;
  std::vector<Monomial> terms_;
  std::vector<double> masses_;
  int max_degree_;
};

double eval(const PolynomialPotential& pot, std::span<const double> point);

/// 1/2 sum x_i^2 + 1/2 sum_ij v_ij x_i x_j.
PolynomialPotential make_coupled_harmonic(int dims, const DenseMatrix& coupling);

/// 1/2 (x^2 + y^2) + kappa x^2 y^2.
PolynomialPotential make_pullen_edmonds(double kappa);

/// 1/2 r^2 + (kappa/8) r^4 in Cartesian form.
PolynomialPotential make_pe_radial_effective(double kappa);

/// 1/2 (x1^2 + x2^2) + lambda (x1^4 + x2^4 + 2 x1^2 x2^2).
PolynomialPotential make_quartic_pair(double lambda);

/// Anisotropic quartic in three dimensions with the coupling set
/// a_xx = 1/2, a_yy = 1/3, a_zz = 1/6, a_xy = a_xz = 1/2, a_yz = 1/4.
PolynomialPotential make_witwit_quartic(double lambda);

/// 1/2 sum x_i^2 + 2 sum x_i^4 + 1/2 sum x_i^6 + sum_{i<j} x_i x_j, D = 3 or 4.
PolynomialPotential make_sextic(int dims);

struct BuiltinModel {
  std::string name;
  std::string description;
  std::optional<double> default_parameter;  // kappa or lambda, when the model has one
};

const std::vector<BuiltinModel>& builtin_models();

/// Constructs a built-in model by name. `parameter` overrides the default
/// coupling; passing one to a parameterless model is a DomainError.
PolynomialPotential make_builtin(std::string_view name, std::optional<double> parameter = std::nullopt);

}  // namespace lsfc
