// Runs the installed CLI binary as a subprocess and checks exit codes and output.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(QDISCORD_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp_path(const std::string& name) { return std::string(QDISCORD_TEST_DIR) + "/" + name; }

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  f << body;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("aligned sweep to stdout") {
    const Result r = run("aligned --grid 0:1.5:5 --out - --quiet");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("# schema=1\n", 0) == 0);
    CHECK(r.out.find("model,n,chi,B_or_theta,L,parity") != std::string::npos);
    CHECK(count_lines(r.out) == 2 + 5);
  }

  TEST_CASE("chain sweep as json") {
    const Result r = run("chain --n 8 --grid 0:1:3 --separations 1,2 --out - --format json --quiet");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 6);
    for (const auto& rec : j) {
      CHECK(rec.at("model") == "cyclic_nn");
      CHECK(rec.at("n") == 8);
    }
  }

  TEST_CASE("lipkin sweep written to a file") {
    const std::string path = tmp_path("cli_lipkin.csv");
    std::remove(path.c_str());
    const Result r = run("lipkin --n 8 --grid 0:1:4 --out " + path + " --quiet");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const std::string body = read_file(path);
    CHECK(body.find("fully_connected,8,0.5,") != std::string::npos);
    CHECK(count_lines(body) == 2 + 4);
  }

  TEST_CASE("format follows the file suffix") {
    const std::string path = tmp_path("cli_aligned.json");
    const Result r = run("aligned --grid 0.2:1.2:3 --out " + path + " --quiet");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(read_file(path));
    CHECK(j.size() == 3);
  }

  TEST_CASE("flags override the config file") {
    const std::string cfg = tmp_path("cli_cfg.json");
    write_file(cfg, R"({"model": "lipkin", "n": 6, "chi": 0.3, "grid": "0:1:7", "output": "-"})");
    const Result a = run("lipkin --config " + cfg + " --quiet");
    REQUIRE(a.code == 0);
    CHECK(count_lines(a.out) == 2 + 7);
    CHECK(a.out.find("fully_connected,6,0.3,") != std::string::npos);
    const Result b = run("lipkin --config " + cfg + " --n 4 --grid 0:1:2 --quiet");
    REQUIRE(b.code == 0);
    CHECK(count_lines(b.out) == 2 + 2);
    CHECK(b.out.find("fully_connected,4,0.3,") != std::string::npos);
  }

  TEST_CASE("factorize report") {
    const Result r = run("factorize --n 6 --chi 0.5 --out -");
    CHECK(r.code == 0);
    CHECK(r.out.find("geometry,n,s,chi,axes_swapped,theta,B_s") != std::string::npos);
    CHECK(count_lines(r.out) == 2 + 6);
    const Result j = run("factorize --geometry open_nn --n 5 --s 1 --chi 0.2 --out - --format json");
    REQUIRE(j.code == 0);
    CHECK_FALSE(nlohmann::json::parse(j.out).is_null());
  }

  TEST_CASE("config errors exit with 2") {
    CHECK(run("aligned --bogus 1").code == 2);
    CHECK(run("aligned --grid 0:1 --out -").code == 2);
    CHECK(run("aligned --grid 1:0:5 --out -").code == 2);
    CHECK(run("chain --n 8 --solver magic --out -").code == 2);
    CHECK(run("aligned --measures D,XYZ --out -").code == 2);
    CHECK(run("aligned --out - --format yaml").code == 2);
    CHECK(run("factorize --Jy 0.3 --chi 0.3 --out -").code == 2);
    CHECK(run("aligned --config " + tmp_path("does_not_exist.json")).code == 2);
    const std::string cfg = tmp_path("cli_badkey.json");
    write_file(cfg, R"({"n": 8, "colour": "blue"})");
    CHECK(run("chain --config " + cfg).code == 2);
    CHECK(run("aligned --out /nonexistent_dir/x.csv --quiet").code == 2);
    CHECK(run("").code == 2);
  }

  TEST_CASE("unsupported requests exit with 3") {
    CHECK(run("factorize --Jy -0.5 --out -").code == 3);
    CHECK(run("factorize --geometry ladder --out -").code == 3);
    const std::string cfg = tmp_path("cli_badmodel.json");
    write_file(cfg, R"({"model": "heisenberg"})");
    CHECK(run("chain --config " + cfg).code == 3);
  }

  TEST_CASE("help exits cleanly") { CHECK(run("--help").code == 0); }
}
