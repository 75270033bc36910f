#include "doctest.h"
#include "sqcat/commands.hpp"
#include "sqcat/hamiltonians.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sqcat;
using namespace sqcat::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sqcat_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path path = dir / "config.json";
  std::ofstream(path) << text;
  return path;
}

int run(const std::string& cmd, const fs::path& dir, const std::string& config_text, std::string* err = nullptr) {
  CommandOptions opts;
  opts.out_dir = (dir / "out").string();
  if (!config_text.empty()) opts.config_path = write_config(dir, config_text).string();
  std::ostringstream out;
  std::ostringstream errs;
  const int code = run_command(cmd, opts, out, errs);
  if (err) *err = errs.str();
  return code;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("config defaults and strictness") {
  const ScenarioConfig c = parse_config("{}");
  CHECK(c.params.hbar_omega == 10.0);
  CHECK(c.dims.n_fock == 80);
  CHECK(c.grid.n_points == 61);
  CHECK(parse_config("{\"preset\": \"deep-squeeze\"}").params.hbar_omega == 50.0);
  CHECK(parse_config("{}", Preset::DeepSqueeze).params.hbar_omega == 50.0);
  CHECK(parse_config("{\"params\": {\"beta\": {\"re\": 0.3, \"im\": 0.1}}}").params.beta == Complex{0.3, 0.1});

  try {
    parse_config("{\n  \"grid\": {\n    \"t_end\": 2,\n    \"steps\": 5\n  }\n}");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    CHECK(std::string(e.what()).find("steps") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("{\"dims\": {\"n_fock\": 4}}"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"dims\": {\"n_fock\": 80, \"guard\": 2}}"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"wigner\": {\"x_min\": 1, \"x_max\": -1}}"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"wigner\": {\"t\": 7}}"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"sweep\": {\"parameter\": \"e_j\"}}"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"outputs\": [\"plots\"]}"), ConfigError);
  CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"grid\": "), ConfigError);
}

TEST_CASE("config hash tracks content, not formatting") {
  const auto a = parse_config("{\"params\": {\"beta\": 0.3}}");
  const auto b = parse_config("{\n  \"params\" : { \"beta\" : 0.30 }\n}\n");
  const auto c = parse_config("{\"params\": {\"beta\": 0.31}}");
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != c.hash());
  CHECK(a.hash().size() == 16);
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_short(1e-6) == "1e-06");
}

TEST_CASE("exit codes") {
  const fs::path dir = scratch_dir("exit");
  std::string err;
  CHECK(run("verify", dir, "{\"dims\": {\"n_fock\": 4}}", &err) == kExitConfigError);
  CHECK(err.find("n_fock") != std::string::npos);
  CHECK(run("evolve", dir, "{\"bogus\": 1}") == kExitConfigError);
  CHECK(run("wigner", dir, "{\"wigner\": {\"x_min\": 2, \"x_max\": -2}}") == kExitConfigError);

  CHECK(run("verify", dir, "{\"params\": {\"hbar_omega\": 1.0}}") == kExitCheckFailure);
  const std::string report = slurp(dir / "out" / "verify_report.json");
  CHECK(report.find("ResonanceSingularity") != std::string::npos);
  CHECK(report.find("\"status\": \"fail\"") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("evolve timeseries") {
  const fs::path dir = scratch_dir("evolve");
  REQUIRE(run("evolve", dir, "{\"grid\": {\"t_end\": 1, \"n_points\": 11}, \"dims\": {\"n_fock\": 40, \"guard\": 8}}") ==
          kExitPass);
  std::istringstream lines(slurp(dir / "out" / "timeseries.csv"));
  std::string line;
  std::getline(lines, line);
  CHECK(line == "# sqcat 1.0.0 timeseries");
  std::getline(lines, line);
  CHECK(line.rfind("# config_hash ", 0) == 0);
  std::getline(lines, line);
  std::getline(lines, line);
  CHECK(line == "t,fidelity_vs_analytic,p_g,p_e,var_x_g,var_p_g,min_var_g,leakage");
  int rows = 0;
  while (std::getline(lines, line)) {
    std::vector<double> v;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) v.push_back(std::stod(cell));
    REQUIRE(v.size() == 8);
    CHECK(v[1] >= 1.0 - 1e-8);
    CHECK(std::abs(v[2] + v[3] - 1.0) <= 1e-10);
    if (rows == 0) {
      CHECK(v[0] == 0.0);
      CHECK(v[2] == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(v[4] == doctest::Approx(0.25).epsilon(1e-12));
      CHECK(v[5] == doctest::Approx(0.25).epsilon(1e-12));
    }
    ++rows;
  }
  CHECK(rows == 11);
  fs::remove_all(dir);
}

TEST_CASE("evolve flags a leakage abort") {
  const fs::path dir = scratch_dir("abort");
  const int code = run("evolve", dir,
                       "{\"gamma_amp\": 1.0, \"dims\": {\"n_fock\": 24, \"guard\": 4}, "
                       "\"params\": {\"beta\": 4}, \"grid\": {\"t_end\": 3, \"n_points\": 31}}");
  CHECK(code == kExitCheckFailure);
  CHECK(slurp(dir / "out" / "timeseries.csv").find("# LeakageAbort") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("wigner output") {
  const fs::path dir = scratch_dir("wigner");
  REQUIRE(run("wigner", dir, "{\"wigner\": {\"resolution\": 7, \"x_min\": -2, \"x_max\": 4, \"p_min\": -3, \"p_max\": 3}}") ==
          kExitPass);
  const std::string csv = slurp(dir / "out" / "wigner.csv");
  CHECK(csv.find("# outcome g\n") != std::string::npos);
  CHECK(csv.find("# t 0\n") != std::string::npos);
  CHECK(csv.find("x,p,w\n") != std::string::npos);
  // Peak of the coherent |1> sits at (1, 0), grid point (i = 3, j = 3).
  CHECK(csv.find("\n1,0,0.636619772367") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("sweep output") {
  const fs::path dir = scratch_dir("sweep");
  REQUIRE(run("sweep", dir, "{\"dims\": {\"n_fock\": 40, \"guard\": 8}}") == kExitPass);
  std::istringstream lines(slurp(dir / "out" / "sweep.csv"));
  std::string line;
  std::vector<std::vector<double>> rows;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'b') continue;
    std::vector<double> v;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) v.push_back(std::stod(cell));
    rows.push_back(v);
  }
  REQUIRE(rows.size() == 5);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    PhysParams p;
    p.beta = rows[k][0];
    CHECK(rows[k][2] == xi_squared(p));
    if (k > 0) CHECK(rows[k][5] < rows[k - 1][5]);
  }
  CHECK(rows[4][3] / rows[2][3] == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(std::isnan(rows[4][6]));
  fs::remove_all(dir);
}
