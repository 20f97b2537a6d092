#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QCS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  while (const auto n = fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "qcs_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("cli: psi prints the count") {
  const auto r = run("psi --x 100 --y 5");
  CHECK(r.status == 0);
  CHECK(r.out == "34\n");
}

TEST_CASE("cli: delta-max writes JSON") {
  const auto path = scratch("dm.json");
  CHECK(run("delta-max --X 10 --x 5 --json " + path.string()).status == 0);
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["d_star"] == 13);
  CHECK(j["S_star"] == 1);
}

TEST_CASE("cli: resonate writes CSV") {
  const auto path = scratch("r.csv");
  CHECK(run("resonate --variant short --X 1e4 --x 50 --alpha 0.01 --delta 0.005 --csv " +
            path.string())
            .status == 0);
  const auto csv = slurp(path);
  CHECK(csv.rfind("variant,X,x,M1,M2,ratio,observed_max,holds\n", 0) == 0);
  CHECK(csv.find(",true\n") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  CHECK(run("delta-max --lo 2 --hi 4 --x 3").status == 3);
  CHECK(run("resonate --variant short --X 1e4 --x 50 --alpha 0.01 --delta 0.02").status == 2);
  CHECK(run("resonate --variant bogus --X 1e4 --x 50").status == 2);
  CHECK(run("psi --x 100").status == 2);
  CHECK(run("gcd-sum --set-file /nonexistent/set.txt").status == 1);
}

TEST_CASE("cli: output is byte-identical across runs and stable across threads") {
  const auto a = run("resonate --variant long --X 1e4 --x 5 --squared");
  const auto b = run("resonate --variant long --X 1e4 --x 5 --squared");
  const auto c = run("resonate --variant long --X 1e4 --x 5 --squared --threads 4");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["theorem"] == "1.3");
}

TEST_CASE("cli: gcd-sum round trips a set file") {
  const auto set = scratch("m.txt");
  const auto first = run("gcd-sum --N 100 --write-set " + set.string());
  CHECK(first.status == 0);
  const auto second = run("gcd-sum --set-file " + set.string());
  CHECK(second.status == 0);
  const auto j1 = nlohmann::json::parse(first.out);
  const auto j2 = nlohmann::json::parse(second.out);
  CHECK(j1["gcd_sum"] == j2["gcd_sum"]);
  CHECK(j1["N"] == 100);
}

TEST_CASE("cli: mean-value emits one object per n") {
  const auto r = run("mean-value --n 1,4 --X 1e3");
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("exact_sum"));
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("cli: verify arith") {
  const auto r = run("verify arith");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
