#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lsfc/eigensolver.hpp"
#include "lsfc/pms.hpp"
#include "lsfc/potential.hpp"

namespace lsfc {

/// Reads the monomial-per-line format: `coeff e1 ... eD`, `#` starts a
/// comment. D is taken from the first term; every line must agree.
PolynomialPotential parse_potential(std::istream& in);
PolynomialPotential parse_potential_file(const std::string& path);

enum class OutputFormat { Text, Csv, Json };

struct RunConfig {
  std::string model;                 // built-in name
  std::string potential_file;        // used instead of a built-in when set
  std::optional<double> parameter;   // kappa or lambda
  std::vector<int> grid_sizes;       // N values
  int levels = 1;                    // k
  StrategyKind strategy = StrategyKind::ScaleOnly;
  double tolerance = 1e-6;           // reference check, absolute
  double residual_tolerance = 1e-10;
  OutputFormat format = OutputFormat::Text;
  bool check = false;
  bool distinct = false;             // report distinct levels, degenerate ones merged
  int threads = 0;                   // 0: hardware concurrency, capped by LSFC_THREADS

  /// Throws ParseError on an unusable configuration.
  void validate() const;
};

/// Parses `solve` arguments (argv[0] is the program, argv[1] may be
/// "solve"). Honours --config FILE with `key = value` lines. Throws
/// ParseError; --help prints usage and returns std::nullopt.
std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out);

struct LevelResult {
  int level = 0;           // index in the report
  int counted_level = 0;   // index with multiplicity
  double energy = 0.0;
  double residual = 0.0;
  int multiplicity = 1;
  std::optional<double> reference;
};

struct GridResult {
  int n = 0;
  std::string grid;        // M^D with a superscript exponent
  TransformOptimum optimum;
  std::vector<LevelResult> levels;
  std::int64_t operator_applications = 0;
};

struct RunReport {
  RunConfig config;
  int dims = 0;
  std::vector<GridResult> grids;
  bool all_within_tolerance = true;
  int checked = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNoConvergence = 3;

/// Solves every grid of the configuration. Grids may run concurrently;
/// the report keeps the configured order.
RunReport solve(const RunConfig& config);

/// Formatting of a finished report.
std::string format_report(const RunReport& report);

/// "19³"-style label.
std::string matrix_label(int m, int dims);

/// Numbers as printed in text and CSV output.
std::string format_number(double v);

/// Full command: parse, solve, print. Returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lsfc
