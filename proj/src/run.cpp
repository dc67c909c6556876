#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsfc/cli.hpp"
#include "lsfc/error.hpp"
#include "lsfc/hamiltonian.hpp"
#include "lsfc/reference.hpp"

namespace lsfc {

void RunConfig::validate() const {
  if (model.empty() == potential_file.empty()) throw ParseError("give exactly one of --model and --potential-file");
  if (grid_sizes.empty()) throw ParseError("--N needs at least one grid size");
  for (int n : grid_sizes)
    if (n < 4 || n % 2 != 0) throw ParseError("--N: grid size " + std::to_string(n) + " must be even and >= 4");
  if (levels < 1) throw ParseError("--k must be >= 1");
  if (!(tolerance > 0.0)) throw ParseError("--tol must be positive");
  if (!(residual_tolerance > 0.0)) throw ParseError("--residual-tol must be positive");
  if (threads < 0) throw ParseError("--threads must be >= 0");
}

std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, std::ostream& out) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  if (!args.empty() && args.front() == "solve") args.erase(args.begin());
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back

  RunConfig cfg;
  std::string strategy = "scale", format = "text";
  double parameter = 0.0;

  CLI::App app{"Low-lying levels of coupled anharmonic oscillators by LSF collocation", "lsfc solve"};
  app.set_config("--config", "", "Read options from a file of `key = value` lines");
  app.add_option("--model", cfg.model, "Built-in model name");
  app.add_option("--potential-file", cfg.potential_file, "Potential in `coeff e1 ... eD` format");
  auto* param = app.add_option("--param", parameter, "Coupling kappa or lambda of the model");
  app.add_option("--N", cfg.grid_sizes, "Grid sizes, comma separated")->delimiter(',');
  app.add_option("--k", cfg.levels, "Number of levels");
  app.add_option("--strategy", strategy, "scale, aniso or rot")->check(CLI::IsMember({"scale", "aniso", "rot"}));
  app.add_option("--tol", cfg.tolerance, "Absolute tolerance of --check");
  app.add_option("--residual-tol", cfg.residual_tolerance, "Relative Ritz residual tolerance");
  app.add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_flag("--check", cfg.check, "Compare with tabulated reference values");
  app.add_flag("--distinct", cfg.distinct, "Merge degenerate levels");
  app.add_option("--threads", cfg.threads, "Grids solved concurrently (0: all cores)");

  try {
    app.parse(args);
  } catch (const CLI::Success&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }
  if (param->count() > 0) cfg.parameter = parameter;
  cfg.strategy = parse_strategy(strategy);
  cfg.format = format == "csv" ? OutputFormat::Csv : format == "json" ? OutputFormat::Json : OutputFormat::Text;
  cfg.validate();
  return cfg;
}

std::string matrix_label(int m, int dims) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string exp;
  for (char c : std::to_string(dims)) exp += digits[c - '0'];
  return std::to_string(m) + exp;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace {

struct Problem {
  PolynomialPotential potential;
  std::string model;  // empty for file potentials
  std::optional<double> parameter;
};

Problem make_problem(const RunConfig& cfg) {
  if (!cfg.potential_file.empty()) {
    if (cfg.parameter) throw ParseError("--param applies to built-in models only");
    return {parse_potential_file(cfg.potential_file), "", std::nullopt};
  }
  PolynomialPotential pot = make_builtin(cfg.model, cfg.parameter);
  std::optional<double> p = cfg.parameter;
  for (const auto& m : builtin_models())
    if (m.name == cfg.model && !p) p = m.default_parameter;
  return {std::move(pot), cfg.model, p};
}

int thread_budget(const RunConfig& cfg, std::size_t jobs) {
  int t = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("LSFC_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) t = std::min(t, cap);
  }
  return std::max(1, std::min<int>(t, static_cast<int>(jobs)));
}

bool same_level(double a, double b) { return std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(b)); }

std::vector<LevelResult> compute_levels(const HamiltonianOperator& op, const RunConfig& cfg, std::int64_t& applications) {
  const int size = static_cast<int>(std::min<std::size_t>(op.size(), 1 << 30));
  EigenRequest req;
  req.residual_tolerance = cfg.residual_tolerance;
  req.how_many = std::min(size, cfg.distinct ? cfg.levels + 2 * op.dims() : cfg.levels);
  if (req.how_many < cfg.levels) throw DomainError("--k exceeds the number of grid points");

  for (;;) {
    req.block_size = std::clamp(req.how_many, 4, 8);
    const EigenResult eig = lowest_eigenpairs(op, req);
    applications += eig.iterations;

    std::vector<LevelResult> levels;
    for (int j = 0; j < req.how_many; ++j) {
      if (cfg.distinct && !levels.empty() && same_level(eig.eigenvalues[j], levels.back().energy)) {
        ++levels.back().multiplicity;
        continue;
      }
      LevelResult r;
      r.level = static_cast<int>(levels.size());
      r.counted_level = j;
      r.energy = eig.eigenvalues[j];
      r.residual = eig.residual_norms[j];
      levels.push_back(r);
    }
    // In distinct mode the last kept level must be followed by a computed
    // value above it, or its multiplicity could be incomplete.
    const bool complete =
        !cfg.distinct || static_cast<int>(levels.size()) > cfg.levels || req.how_many == size;
    if (complete) {
      levels.resize(std::min<std::size_t>(levels.size(), cfg.levels));
      return levels;
    }
    req.how_many = std::min(size, 2 * req.how_many);
  }
}

GridResult solve_grid(const Problem& problem, const RunConfig& cfg, int n) {
  OptimizationStrategy strategy;
  strategy.kind = cfg.strategy;
  GridResult g;
  g.n = n;
  g.grid = matrix_label(n - 1, problem.potential.dims());
  g.optimum = optimize_full(problem.potential, n, strategy);
  const HamiltonianOperator op = build(problem.potential, g.optimum.params, n);
  g.levels = compute_levels(op, cfg, g.operator_applications);
  if (!problem.model.empty())
    for (LevelResult& l : g.levels)
      if (auto ref = find_reference(problem.model, problem.parameter, strategy_name(cfg.strategy), n, l.counted_level))
        l.reference = ref->value;
      else if (auto exact = find_exact_reference(problem.model, problem.parameter, l.counted_level))
        l.reference = exact->value;
  return g;
}

}  // namespace

RunReport solve(const RunConfig& config) {
  config.validate();
  const Problem problem = make_problem(config);
  RunReport report;
  report.config = config;
  report.dims = problem.potential.dims();

  const std::size_t jobs = config.grid_sizes.size();
  std::vector<GridResult> results(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs;) {
      try {
        results[i] = solve_grid(problem, config, config.grid_sizes[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = thread_budget(config, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  report.grids = std::move(results);
  if (config.check)
    for (const GridResult& g : report.grids)
      for (const LevelResult& l : g.levels)
        if (l.reference) {
          ++report.checked;
          if (!(std::abs(l.energy - *l.reference) <= config.tolerance)) report.all_within_tolerance = false;
        }
  return report;
}

namespace {

// Pads by code points so superscript labels line up.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t cps = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++cps;
  return cps >= width ? s + " " : s + std::string(width - cps, ' ');
}

std::string model_title(const RunReport& r) {
  std::string t = r.config.potential_file.empty() ? r.config.model : r.config.potential_file;
  if (r.config.parameter) t += " (parameter " + format_number(*r.config.parameter) + ")";
  return t;
}

std::string format_text(const RunReport& r) {
  std::ostringstream out;
  const RunConfig& c = r.config;
  out << "model " << model_title(r) << ", D = " << r.dims << ", strategy " << strategy_name(c.strategy)
      << (c.distinct ? ", distinct levels" : "") << "\n";
  std::size_t columns = 0;
  for (const auto& g : r.grids) columns = std::max(columns, g.levels.size());
  out << pad("grid", 16);
  for (std::size_t j = 0; j < columns; ++j) out << pad("E" + std::to_string(j), 16);
  out << "\n";
  for (const auto& g : r.grids) {
    out << pad(g.grid + " × " + g.grid, 16);
    for (const auto& l : g.levels) out << pad(format_number(l.energy), 16);
    out << "\n";
    if (!c.check) continue;
    out << pad("  reference", 16);
    for (const auto& l : g.levels) out << pad(l.reference ? format_number(*l.reference) : "-", 16);
    out << "\n" << pad("  abs error", 16);
    for (const auto& l : g.levels)
      out << pad(l.reference ? format_number(std::abs(l.energy - *l.reference)) : "-", 16);
    out << "\n";
  }
  out << "\nparameters\n";
  for (const auto& g : r.grids) {
    const TransformParams& p = g.optimum.params;
    out << pad(g.grid, 8) << "L = " << format_number(p.half_width);
    if (c.strategy != StrategyKind::ScaleOnly)
      for (std::size_t i = 1; i < p.axis_scales.size(); ++i) out << "  sigma" << i + 1 << " = " << format_number(p.axis_scales[i]);
    for (std::size_t i = 0; i < p.angles.size(); ++i) out << "  theta" << i + 1 << " = " << format_number(p.angles[i]);
    out << "  trace = " << format_number(g.optimum.trace) << "\n";
  }
  if (c.check) {
    out << "\ncheck: " << r.checked << " value(s) against references, tolerance " << format_number(c.tolerance)
        << ": " << (r.all_within_tolerance ? "ok" : "MISMATCH") << "\n";
  }
  // drop the padding at line ends
  std::string text = out.str(), trimmed;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + "\n";
  }
  return trimmed;
}

std::string format_csv(const RunReport& r) {
  std::ostringstream out;
  out << "model,grid,level,energy,reference,abs_error\n";
  const std::string model = r.config.potential_file.empty() ? r.config.model : r.config.potential_file;
  for (const auto& g : r.grids)
    for (const auto& l : g.levels) {
      out << model << ',' << g.grid << ',' << l.level << ',' << format_number(l.energy) << ',';
      if (l.reference) out << format_number(*l.reference) << ',' << format_number(std::abs(l.energy - *l.reference));
      else out << ',';
      out << "\n";
    }
  return out.str();
}

std::string format_json(const RunReport& r) {
  using nlohmann::json;
  json j;
  j["model"] = r.config.potential_file.empty() ? r.config.model : r.config.potential_file;
  j["parameter"] = r.config.parameter ? json(*r.config.parameter) : json(nullptr);
  j["dims"] = r.dims;
  j["strategy"] = std::string(strategy_name(r.config.strategy));
  j["distinct"] = r.config.distinct;
  j["grids"] = json::array();
  for (const auto& g : r.grids) {
    json jg;
    jg["n"] = g.n;
    jg["grid"] = g.grid;
    jg["half_width"] = g.optimum.params.half_width;
    jg["axis_scales"] = g.optimum.params.axis_scales;
    jg["angles"] = g.optimum.params.angles;
    jg["trace"] = g.optimum.trace;
    jg["operator_applications"] = g.operator_applications;
    jg["levels"] = json::array();
    for (const auto& l : g.levels) {
      json jl{{"level", l.level},
              {"counted_level", l.counted_level},
              {"energy", l.energy},
              {"residual", l.residual},
              {"multiplicity", l.multiplicity}};
      jl["reference"] = l.reference ? json(*l.reference) : json(nullptr);
      jl["abs_error"] = l.reference ? json(std::abs(l.energy - *l.reference)) : json(nullptr);
      jg["levels"].push_back(jl);
    }
    j["grids"].push_back(jg);
  }
  if (r.config.check)
    j["check"] = {{"tolerance", r.config.tolerance}, {"checked", r.checked}, {"ok", r.all_within_tolerance}};
  return j.dump(2) + "\n";
}

}  // namespace

std::string format_report(const RunReport& report) {
  switch (report.config.format) {
    case OutputFormat::Csv:
      return format_csv(report);
    case OutputFormat::Json:
      return format_json(report);
    case OutputFormat::Text:
      break;
  }
  return format_text(report);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_arguments(argc, argv, out);
  } catch (const Error& e) {
    err << "lsfc: " << e.what() << "\n";
    return kExitConfig;
  }
  if (!cfg) return kExitOk;

  RunReport report;
  try {
    report = solve(*cfg);
  } catch (const ConvergenceError& e) {
    err << "lsfc: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const OptimizationError& e) {
    err << "lsfc: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const Error& e) {
    err << "lsfc: " << e.what() << "\n";
    return kExitConfig;
  }
  out << format_report(report);
  return cfg->check && !report.all_within_tolerance ? kExitMismatch : kExitOk;
}

}  // namespace lsfc
