#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lsfc/cli.hpp"
#include "lsfc/error.hpp"

using namespace lsfc;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lsfc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
  return cells;
}

}  // namespace

TEST_CASE("coupled oscillators at N = 6 match the references") {
  const auto r = run({"solve", "--model", "harmonic4d", "--N", "6", "--check"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("5⁴ × 5⁴") != std::string::npos);
  CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("sextic oscillator, three distinct levels on two grids") {
  const auto r = run({"solve", "--model", "sextic3d", "--N", "18,20", "--k", "3", "--distinct", "--check"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("17³ × 17³") != std::string::npos);
  CHECK(r.out.find("19³ × 19³") != std::string::npos);
  CHECK(r.out.find("2.97830") != std::string::npos);
}

TEST_CASE("configuration errors exit with status 2") {
  CHECK(run({"solve", "--model", "harmonic4d", "--N", "0"}).status == kExitConfig);
  CHECK(run({"solve", "--model", "nope", "--N", "10"}).status == kExitConfig);
  CHECK(run({"solve", "--N", "10"}).status == kExitConfig);
  CHECK(run({"solve", "--model", "pe", "--N", "10", "--strategy", "full"}).status == kExitConfig);
  CHECK(run({"solve", "--model", "pe", "--N", "10", "--bogus"}).status == kExitConfig);
  const auto r = run({"solve", "--model", "harmonic4d", "--N", "0"});
  CHECK(!r.err.empty());
}

TEST_CASE("reference mismatch exits with status 1") {
  const auto r = run({"solve", "--model", "pe", "--N", "40", "--check", "--tol", "1e-15"});
  CHECK(r.status == kExitMismatch);
  CHECK(r.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("text, CSV and JSON report the same numbers") {
  const std::vector<std::string> base = {"solve", "--model", "pe", "--N", "30,40", "--k", "3"};
  auto with = [&](const std::string& fmt) {
    auto a = base;
    a.push_back("--format");
    a.push_back(fmt);
    return run(a);
  };
  const auto text = with("text"), csv = with("csv"), json = with("json");
  REQUIRE(text.status == 0);
  REQUIRE(csv.status == 0);
  REQUIRE(json.status == 0);

  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "model,grid,level,energy,reference,abs_error");
  std::vector<std::string> energies;
  while (std::getline(lines, line)) {
    const auto cells = split_csv_line(line);
    REQUIRE(cells.size() >= 4);
    CHECK(cells[0] == "pe");
    energies.push_back(cells[3]);
  }
  REQUIRE(energies.size() == 6);
  for (const auto& e : energies) CHECK(text.out.find(e) != std::string::npos);

  const auto doc = nlohmann::json::parse(json.out);
  std::vector<std::string> from_json;
  for (const auto& g : doc["grids"])
    for (const auto& l : g["levels"]) from_json.push_back(format_number(l["energy"].get<double>()));
  CHECK(from_json == energies);
}

TEST_CASE("runs are deterministic") {
  const std::vector<std::string> args = {"solve", "--model", "witwit", "--N", "12,14", "--strategy", "rot", "--k", "2"};
  const auto a = run(args), b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto one_thread = args;
  one_thread.insert(one_thread.end(), {"--threads", "1"});
  CHECK(run(one_thread).out == a.out);
}

TEST_CASE("options from a configuration file") {
  const auto cfg = temp_file("lsfc_test_config.ini", "model = sextic3d\nN = 18,20\nk = 3\ndistinct = true\ncheck = true\n");
  const auto r = run({"solve", "--config", cfg.string()});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("19³ × 19³") != std::string::npos);
  std::filesystem::remove(cfg);

  std::vector<const char*> argv = {"lsfc", "--model", "pe", "--param", "0.5", "--N", "10,12"};
  std::ostringstream out;
  const auto parsed = parse_arguments(static_cast<int>(argv.size()), argv.data(), out);
  REQUIRE(parsed);
  CHECK(parsed->model == "pe");
  CHECK(parsed->parameter == 0.5);
  CHECK(parsed->grid_sizes == std::vector<int>{10, 12});
}

TEST_CASE("potential from a file equals the built-in model") {
  const auto f = temp_file("lsfc_test_pe.txt",
                           "# Pullen-Edmonds, kappa = 1\n0.5 2 0\n0.5 0 2\n\n1 2 2  # coupling\n");
  const auto from_file = run({"solve", "--potential-file", f.string(), "--N", "20", "--k", "2", "--format", "csv"});
  const auto builtin = run({"solve", "--model", "pe", "--N", "20", "--k", "2", "--format", "csv"});
  REQUIRE(from_file.status == 0);
  auto energies = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::vector<std::string> e;
    while (std::getline(in, line)) e.push_back(split_csv_line(line)[3]);
    return e;
  };
  CHECK(energies(from_file.out) == energies(builtin.out));
  CHECK(run({"solve", "--potential-file", f.string(), "--param", "2", "--N", "20"}).status == kExitConfig);
  std::filesystem::remove(f);
  CHECK(run({"solve", "--potential-file", "/nonexistent/lsfc.txt", "--N", "20"}).status == kExitConfig);
}

TEST_CASE("labels and numbers") {
  CHECK(matrix_label(19, 3) == "19³");
  CHECK(matrix_label(9, 4) == "9⁴");
  CHECK(matrix_label(39, 2) == "39²");
  CHECK(format_number(1.1790711996155) == "1.1790712");
}

#ifdef LSFC_CLI_PATH
TEST_CASE("installed binary") {
  const std::string cmd = std::string("\"") + LSFC_CLI_PATH + "\" solve --model harmonic4d --N 6 --check > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const std::string bad = std::string("\"") + LSFC_CLI_PATH + "\" solve --model harmonic4d --N 0 2> /dev/null";
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == kExitConfig);
}
#endif
