#include "lsfc/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "lsfc/error.hpp"
#include "lsfc/simd/kernels.hpp"

namespace lsfc {

namespace {

using Vector = std::vector<double>;

class KrylovBasis {
 public:
  KrylovBasis(const HamiltonianOperator& op, std::size_t capacity)
      : op_(op), k_(simd::active_kernels()), n_(op.size()), t_(capacity, capacity) {}

  std::size_t count() const { return vectors_.size(); }
  std::size_t expanded() const { return expanded_; }
  const Vector& vector(std::size_t i) const { return vectors_[i]; }
  const DenseMatrix& projection() const { return t_; }
  std::int64_t applications() const { return applications_; }

  // Orthogonalizes w against the basis twice (classical Gram-Schmidt with
  // reorthogonalization). Returns the norm before and after.
  std::pair<double, double> orthogonalize(Vector& w, std::vector<double>* coefficients) {
    const double before = std::sqrt(k_.dot(w.data(), w.data(), n_));
    if (coefficients) coefficients->assign(count(), 0.0);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < count(); ++i) {
        const double c = k_.dot(vectors_[i].data(), w.data(), n_);
        k_.axpy(-c, vectors_[i].data(), w.data(), n_);
        if (coefficients) (*coefficients)[i] += c;
      }
    return {before, std::sqrt(k_.dot(w.data(), w.data(), n_))};
  }

  // Appends w if it carries a direction not yet in the basis.
  bool append(Vector w, std::vector<double>* coefficients = nullptr) {
    const auto [before, after] = orthogonalize(w, coefficients);
    if (!(after > 1e-12 * before) || after == 0.0) return false;
    k_.scale(1.0 / after, w.data(), n_);
    last_norm_ = after;
    vectors_.push_back(std::move(w));
    return true;
  }

  void append_random(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int attempt = 0; attempt < 8; ++attempt) {
      Vector w(n_);
      for (double& x : w) x = dist(rng);
      if (append(std::move(w))) return;
    }
    throw Error("lanczos: could not extend the basis with a random vector");
  }

  // Expands the next unexpanded column: H v_e, projected on the basis.
  void expand() {
    const std::size_t e = expanded_;
    Vector w(n_);
    op_.apply(vectors_[e], w, k_);
    ++applications_;
    std::vector<double> coeff;
    const std::size_t before = count();
    const bool grew = append(std::move(w), &coeff);
    for (std::size_t i = e; i < before; ++i) t_(i, e) = t_(e, i) = coeff[i];
    if (grew) t_(before, e) = t_(e, before) = last_norm_;
    ++expanded_;
  }

  // Replaces the basis by the first `keep` Ritz vectors of the expanded
  // block followed by the unexpanded tail.
  void restart(const SymmetricEigen& ritz, std::size_t keep) {
    const std::size_t top = expanded_;
    const std::size_t tail = count() - top;
    std::vector<Vector> next;
    next.reserve(keep + tail);
    for (std::size_t j = 0; j < keep; ++j) {
      Vector u(n_, 0.0);
      for (std::size_t i = 0; i < top; ++i) k_.axpy(ritz.vectors(i, j), vectors_[i].data(), u.data(), n_);
      next.push_back(std::move(u));
    }
    DenseMatrix t(t_.rows(), t_.cols());
    for (std::size_t j = 0; j < keep; ++j) {
      t(j, j) = ritz.values[j];
      for (std::size_t q = 0; q < tail; ++q) {
        double c = 0.0;
        for (std::size_t i = 0; i < top; ++i) c += t_(top + q, i) * ritz.vectors(i, j);
        t(keep + q, j) = t(j, keep + q) = c;
      }
    }
    for (std::size_t q = 0; q < tail; ++q) next.push_back(std::move(vectors_[top + q]));
    vectors_ = std::move(next);
    t_ = std::move(t);
    expanded_ = keep;
  }

  Vector combine(const DenseMatrix& s, std::size_t column, std::size_t rows) const {
    Vector y(n_, 0.0);
    for (std::size_t i = 0; i < rows; ++i) k_.axpy(s(i, column), vectors_[i].data(), y.data(), n_);
    return y;
  }

  const simd::KernelTable& kernels() const { return k_; }

 private:
  const HamiltonianOperator& op_;
  const simd::KernelTable& k_;
  std::size_t n_;
  std::vector<Vector> vectors_;
  DenseMatrix t_;
  std::size_t expanded_ = 0;
  double last_norm_ = 0.0;
  std::int64_t applications_ = 0;
};

SymmetricEigen rayleigh_ritz(const DenseMatrix& t, std::size_t top) {
  DenseMatrix block(top, top);
  for (std::size_t i = 0; i < top; ++i)
    for (std::size_t j = 0; j <= i; ++j) block(i, j) = block(j, i) = 0.5 * (t(i, j) + t(j, i));
  return symmetric_eigen(block, true);
}

}  // namespace

EigenResult lowest_eigenpairs(const HamiltonianOperator& op, const EigenRequest& req) {
  const std::size_t n = op.size();
  if (req.how_many < 1) throw DomainError("eigen request: how_many must be >= 1");
  if (static_cast<std::size_t>(req.how_many) > n)
    throw DomainError("eigen request: how_many exceeds the operator dimension");
  if (!(req.residual_tolerance > 0.0)) throw DomainError("eigen request: tolerance must be positive");
  if (req.block_size < 1) throw DomainError("eigen request: block size must be >= 1");

  const std::size_t want = std::min<std::size_t>(req.how_many + 2, n);
  const std::size_t block = std::min<std::size_t>(req.block_size, n);
  std::size_t top = req.max_lanczos_dimension > 0
                        ? static_cast<std::size_t>(req.max_lanczos_dimension)
                        : std::max<std::size_t>(80, 4 * want + 2 * block);
  top = std::min(top, n);
  if (top < n && top <= want + block)
    throw DomainError("eigen request: Lanczos dimension must exceed how_many + 2 + block size");
  const std::size_t keep = std::min(want + (top - want) / 3, top - block);

  std::mt19937_64 rng(req.seed);
  KrylovBasis basis(op, top + block + 1);
  for (std::size_t b = 0; b < block; ++b) basis.append_random(rng);

  EigenResult result;
  std::vector<double> ritz_values, ritz_residuals;
  for (;;) {
    while (basis.expanded() < top) {
      if (basis.expanded() == basis.count()) {
        if (basis.count() == n) break;
        basis.append_random(rng);  // invariant subspace: continue elsewhere
      }
      basis.expand();
      if (basis.applications() > req.max_iterations) {
        // report the current Ritz estimates of the expanded block
        const std::size_t e = basis.expanded();
        const SymmetricEigen partial = rayleigh_ritz(basis.projection(), e);
        std::vector<double> values, residuals;
        for (std::size_t j = 0; j < std::min(want, e); ++j) {
          double r2 = 0.0;
          for (std::size_t q = e; q < basis.count(); ++q) {
            double c = 0.0;
            for (std::size_t i = 0; i < e; ++i) c += basis.projection()(q, i) * partial.vectors(i, j);
            r2 += c * c;
          }
          values.push_back(partial.values[j]);
          residuals.push_back(std::sqrt(r2));
        }
        throw ConvergenceError("lanczos: iteration budget of " + std::to_string(req.max_iterations) +
                                   " operator applications exhausted",
                               values, residuals);
      }
    }

    const std::size_t expanded = basis.expanded();
    const SymmetricEigen ritz = rayleigh_ritz(basis.projection(), expanded);
    const std::size_t tail = basis.count() - expanded;
    ritz_values.assign(ritz.values.begin(), ritz.values.begin() + std::min(want, expanded));
    ritz_residuals.assign(ritz_values.size(), 0.0);
    bool converged = true;
    for (std::size_t j = 0; j < ritz_values.size(); ++j) {
      double r2 = 0.0;
      for (std::size_t q = 0; q < tail; ++q) {
        double c = 0.0;
        for (std::size_t i = 0; i < expanded; ++i) c += basis.projection()(expanded + q, i) * ritz.vectors(i, j);
        r2 += c * c;
      }
      ritz_residuals[j] = std::sqrt(r2);
      converged = converged && ritz_residuals[j] <= req.residual_tolerance * std::max(1.0, std::abs(ritz_values[j]));
    }
    converged = converged && ritz_values.size() >= want;

    const bool exhausted = tail == 0 && expanded == n;
    if (converged || exhausted) {
      EigenResult candidate;
      candidate.restarts = result.restarts;
      bool certified = true;
      for (int j = 0; j < req.how_many; ++j) {
        std::vector<double> y = basis.combine(ritz.vectors, j, expanded);
        const double norm = std::sqrt(basis.kernels().dot(y.data(), y.data(), y.size()));
        basis.kernels().scale(1.0 / norm, y.data(), y.size());
        std::vector<double> hy(n);
        op.apply(y, hy, basis.kernels());
        basis.kernels().axpy(-ritz.values[j], y.data(), hy.data(), n);
        const double residual = std::sqrt(basis.kernels().dot(hy.data(), hy.data(), n));
        certified = certified && residual <= req.residual_tolerance * std::max(1.0, std::abs(ritz.values[j]));
        candidate.eigenvalues.push_back(ritz.values[j]);
        candidate.residual_norms.push_back(residual);
        if (req.want_vectors) candidate.eigenvectors.push_back(std::move(y));
      }
      // The tail estimate can undershoot the true residual by rounding;
      // keep iterating until the true residuals pass as well.
      if (certified || exhausted) {
        candidate.iterations = basis.applications() + req.how_many;
        return candidate;
      }
    }
    basis.restart(ritz, keep);
    ++result.restarts;
  }
}

std::vector<double> dense_eigen(const DenseMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) throw ShapeError("dense_eigen: matrix is not square");
  if (static_cast<std::int64_t>(matrix.rows()) > kMaxDenseDimension)
    throw CapacityError("dense_eigen: dimension " + std::to_string(matrix.rows()) + " exceeds " +
                        std::to_string(kMaxDenseDimension));
  return symmetric_eigen(matrix, false).values;
}

}  // namespace lsfc
