#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lsfc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix extents do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Problem size exceeds a configured limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

/// Parameter optimization did not converge. Carries the best point seen.
class OptimizationError : public Error {
 public:
  OptimizationError(const std::string& what, std::vector<double> best = {}, double best_value = 0.0)
      : Error(what), best_(std::move(best)), best_value_(best_value) {}
  const std::vector<double>& best() const { return best_; }
  double best_value() const { return best_value_; }

 private:
  std::vector<double> best_;
  double best_value_;
};

/// Eigensolver hit its iteration limit. Carries the partial Ritz data.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> ritz, std::vector<double> residuals)
      : Error(what), ritz_(std::move(ritz)), residuals_(std::move(residuals)) {}
  const std::vector<double>& ritz_values() const { return ritz_; }
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> ritz_;
  std::vector<double> residuals_;
};

}  // namespace lsfc
