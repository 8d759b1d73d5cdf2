#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(NCSF_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("kostka") {
  Run r = run("kostka --n 3 --family qt --format csv");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "1,\"q_{1,2}\",\"q_{1,1}\",\"q_{1,1}*q_{1,2}\"");
  std::getline(in, line);
  CHECK(line == "1,\"t_{1,2}\",\"q_{1,1}\",\"q_{1,1}*t_{1,2}\"");

  Run j = run("kostka --n 2");
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["order"] == nlohmann::json({"2", "1.1"}));
  CHECK(doc["entries"].size() == 2);

  Run inv = run("kostka --n 2 --family qt --inverse --format latex");
  CHECK(inv.code == 0);
  CHECK(inv.out.find("\\begin{array}") != std::string::npos);
}

TEST_CASE("product and expand") {
  Run r = run("product --family qt --left 2 --right 2");
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["terms"].size() == 4);

  Run e = run("expand --basis S --composition 2,1,1");
  CHECK(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["terms"].size() == 4);
}

TEST_CASE("errors and exit codes") {
  CHECK(run("kostka --n 3 --bogus").code == 2);
  CHECK(run("kostka --n 3 --format xml").code == 2);
  CHECK(run("expand --basis P --composition 2,0").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("determinism, --out and the seed") {
  Run a = run("verify --suite compositions");
  Run b = run("verify --suite compositions");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  auto path = std::filesystem::temp_directory_path() / "ncsf_cli_test.json";
  std::filesystem::remove(path);
  Run o = run("verify --suite compositions --out " + path.string());
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == a.out);
  std::filesystem::remove(path);

  Run s1 = run("verify --suite polyring --seed 5");
  Run s2 = run("verify --suite polyring", "NCSF_SEED=5");
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("reports") {
  Run h = run("hookcheck --n 4 --k 1 --mode transform-q");
  CHECK(h.code == 0);
  auto doc = nlohmann::json::parse(h.out);
  CHECK(doc.contains("status"));

  Run n = run("nabla --n 3 --check nablam --format csv");
  CHECK(n.code == 0);
  CHECK(!n.out.empty());
  CHECK(run("hookcheck --n 3 --k 3").code == 2);
}
