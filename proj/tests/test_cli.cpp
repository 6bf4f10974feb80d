#include <unistd.h>

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string fresh_tmp_path(const char* suffix) {
  std::string tmpl = "/tmp/covres_cli_XXXXXX";
  int fd = mkstemp(tmpl.data());
  REQUIRE(fd >= 0);
  close(fd);
  std::remove(tmpl.c_str());
  return tmpl + suffix;
}

// run the built binary with stdout captured, stderr folded in
RunResult run_cli(const std::string& args) {
  std::string path = fresh_tmp_path(".out");
  std::string cmd =
      std::string(COVRES_CLI_PATH) + " " + args + " > " + path + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  res.out = buf.str();
  std::remove(path.c_str());
  return res;
}

}  // namespace

TEST_CASE("shape output is exact and repeatable") {
  RunResult a = run_cli("shape --flavor skew --r 4 --chi 2,1");
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.out ==
          "shape of (2,1)  flavor=skew  r=4\n"
          "  0: (2,1)\n"
          "  1: (2,1,1,1)\n");
  RunResult b = run_cli("shape --flavor skew --r 4 --chi 2,1");
  REQUIRE(b.out == a.out);
}

TEST_CASE("json output carries the schema version") {
  RunResult res = run_cli("--format json shape --flavor skew --r 4 --chi 1,1");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.out.find("\"schema_version\": 1") != std::string::npos);
  REQUIRE(res.out.find("\"command\": \"shape\"") != std::string::npos);
}

TEST_CASE("verification commands report through the exit code") {
  RunResult pass = run_cli("verify euler --flavor skew --r 4 --chi 1,1 --degree 6");
  REQUIRE(pass.exit_code == 0);
  REQUIRE(pass.out.find("pass") != std::string::npos);

  RunResult hom = run_cli("verify hom --r 4 --n 4 --lambda 1 --mu 1 --degree 4");
  REQUIRE(hom.exit_code == 0);
}

TEST_CASE("usage problems exit with code two") {
  REQUIRE(run_cli("shape --flavor skew --r 5 --chi 1").exit_code == 2);
  REQUIRE(run_cli("shape --flavor skew --r 4 --chi 1,2").exit_code == 2);
  REQUIRE(run_cli("shape --flavor ska --r 4 --chi 1").exit_code == 2);
  REQUIRE(run_cli("nonsense").exit_code == 2);
  REQUIRE(run_cli("pieri solve --r 6 --chi 2,2,2 --verify-homology --degree 6")
              .exit_code == 2);
}

TEST_CASE("the cache changes nothing but the wall clock") {
  std::string dir = fresh_tmp_path(".cachedir");
  std::string args = "verify euler --flavor symmetric --r 3 --chi 2 --degree 6";
  RunResult cold = run_cli("--cache-dir " + dir + " " + args);
  RunResult warm = run_cli("--cache-dir " + dir + " " + args);
  RunResult off = run_cli("--no-cache " + args);
  REQUIRE(cold.exit_code == 0);
  REQUIRE(cold.out == warm.out);
  REQUIRE(cold.out == off.out);
  REQUIRE(std::system(("rm -rf " + dir).c_str()) == 0);
}

TEST_CASE("worker count never changes the bytes") {
  std::string args = "oracle crosscheck --flavor symmetric --r 3 --chi 1 --degree 3";
  RunResult one = run_cli(args);
  RunResult four = run_cli("--jobs 4 " + args);
  REQUIRE(one.exit_code == 0);
  REQUIRE(one.out == four.out);
}

TEST_CASE("the self test is green") {
  RunResult res = run_cli("selftest");
  REQUIRE(res.exit_code == 0);
  REQUIRE(res.out.find("FAIL") == std::string::npos);
}
