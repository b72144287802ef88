#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the installed CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(INEQLAB_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/ineqlab_test_") + name;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream is(path);
  REQUIRE(is.good());
  nlohmann::json j;
  is >> j;
  return j;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval: trivial, derived and domain-error inputs") {
  const RunResult unit = run_cli("eval --x 1,1,1 --alpha 2.5");
  CHECK(unit.exit_code == 0);
  CHECK(unit.out.find("sum = 0") != std::string::npos);
  CHECK(unit.out.find("satisfied") != std::string::npos);

  const RunResult pair = run_cli("eval --x 2,0.5 --alpha 3");
  CHECK(pair.exit_code == 0);
  CHECK(pair.out.find("0.5294117647058") != std::string::npos);

  // rational input parses to the same values
  const RunResult rational = run_cli("eval --x 2,1/2 --alpha 3");
  CHECK(rational.exit_code == 0);
  CHECK(rational.out.find("0.5294117647058") != std::string::npos);

  const RunResult bad = run_cli("eval --x 0,1 --alpha 2");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify: clearance and forced violation") {
  const RunResult clear = run_cli("--seed 7 verify --n 3 --alpha 2.5 --count 2000");
  CHECK(clear.exit_code == 0);
  CHECK(clear.out.find("0 violations") != std::string::npos);

  const RunResult prop2 = run_cli("--seed 7 verify --n 2 --prop 2 --alpha -1 --count 2000");
  CHECK(prop2.exit_code == 0);

  const RunResult band = run_cli("--seed 7 --force verify --n 3 --pred ineq3 --beta -1 --count 2000");
  CHECK(band.exit_code == 1);

  // out-of-range exponent without --force is a usage error
  const RunResult gated = run_cli("verify --n 3 --pred ineq3 --beta -1 --count 10");
  CHECK(gated.exit_code == 2);
}

TEST_CASE("family subcommand") {
  const RunResult b = run_cli("family --remark b --n 3 --alpha 1.05");
  CHECK(b.exit_code == 1);  // the reproduced phenomenon is a confirmed violation
  CHECK(b.out.find("0.83333333333333") != std::string::npos);
  CHECK(b.out.find("0.5") != std::string::npos);
  CHECK(b.out.find("violated") != std::string::npos);

  const RunResult a = run_cli("family --remark a --n 3 --beta -1 --x 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("0.75") != std::string::npos);

  const RunResult a2 = run_cli("family --remark a --n 3 --beta -1 --x 0.5");
  CHECK(a2.exit_code == 1);  // negative side of the band

  const RunResult d = run_cli("family --remark d --n 3 --x 1.2 --alphas -10,-20,-40");
  CHECK(d.exit_code == 1);  // positive sums confirm the reversed inequality fails
  CHECK(d.out.find("1.136") != std::string::npos);

  const RunResult c = run_cli("family --remark c --n 4 --count 300");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("gamma") != std::string::npos);

  const RunResult bad = run_cli("family --remark z");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("bisect subcommand") {
  const RunResult n2 = run_cli("bisect --n 2 --case 2");
  CHECK(n2.exit_code == 2);  // the zero-sum bound holds for every alpha >= 1 when n = 2

  const RunResult est = run_cli("--seed 3 bisect --n 3 --case 2 --tol 0.2 --budget 6000");
  CHECK(est.exit_code == 0);
  CHECK(est.out.find("bracket") != std::string::npos);
  CHECK(est.out.find("valid") != std::string::npos);
}

TEST_CASE("sweep subcommand and CSV schema") {
  const std::string csv = temp_path("sweep.csv");
  std::remove(csv.c_str());
  const RunResult ok =
      run_cli("--seed 5 sweep --n-list 2,3 --alpha-grid 1:2:0.5 --count 300 --out " + csv);
  CHECK(ok.exit_code == 0);
  std::ifstream is(csv);
  REQUIRE(is.good());
  std::string header;
  std::getline(is, header);
  CHECK(header == "n,alpha,predicate,min_margin,violations,evaluations");
  int rows = 0;
  for (std::string line; std::getline(is, line);)
    if (!line.empty()) ++rows;
  CHECK(rows == 2 * 3);

  const RunResult empty = run_cli("sweep --n-list 3 --alpha-grid 2:1:0.5 --count 10 --out " + csv);
  CHECK(empty.exit_code == 2);

  const RunResult unwritable =
      run_cli("sweep --n-list 3 --alpha-grid 1:2:0.5 --count 10 --out /nonexistent/x.csv");
  CHECK(unwritable.exit_code == 2);
}

TEST_CASE("json reports are deterministic modulo wall time") {
  const std::string j1 = temp_path("r1.json"), j2 = temp_path("r2.json");
  const std::string cmd = "--seed 11 --json ";
  CHECK(run_cli(cmd + j1 + " verify --n 3 --alpha 2,2.5 --count 500").exit_code == 0);
  CHECK(run_cli(cmd + j2 + " verify --n 3 --alpha 2,2.5 --count 500").exit_code == 0);
  nlohmann::json a = load_json(j1), b = load_json(j2);
  CHECK(a.at("schema") == 1);
  a.erase("wall_time_s");
  b.erase("wall_time_s");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("violation reports embed high-precision witnesses") {
  const std::string j = temp_path("witness.json");
  const RunResult r =
      run_cli("--seed 13 --force --json " + j + " verify --n 3 --pred ineq3 --beta -1 --count 500");
  CHECK(r.exit_code == 1);
  const nlohmann::json doc = load_json(j);
  bool found = false;
  for (const auto& res : doc.at("results")) {
    if (res.contains("worst")) {
      found = true;
      for (const auto& s : res.at("worst").at("witness_logx")) {
        const std::string str = s.get<std::string>();
        CHECK(str.size() >= 22);  // sign + 21 significant digits + exponent
      }
    }
  }
  CHECK(found);
}

}  // TEST_SUITE
