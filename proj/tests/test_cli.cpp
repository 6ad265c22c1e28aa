#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

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

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd;
  if (!env.empty()) cmd += env + " ";
  cmd += "\"" BIMULCON_CLI_PATH "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  REQUIRE(is.good());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

long long number_after(const std::string& text, const std::string& tag) {
  auto pos = text.find(tag);
  REQUIRE(pos != std::string::npos);
  return std::atoll(text.c_str() + pos + tag.size());
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run_cli("").exit_code == 64);
  CHECK(run_cli("frobnicate").exit_code == 64);
  CHECK(run_cli("certify -a 2 -b 2").exit_code == 64);  // missing -r/-t
}

TEST_CASE("version flag") {
  RunResult r = run_cli("--version");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0.1.0"));
}

TEST_CASE("certify") {
  RunResult ok = run_cli("certify -a 2 -b 2 -r 1 -t 4");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "certified"));
  CHECK(contains(ok.out, "rank 10/10"));
  CHECK(contains(ok.out, "12x10"));
  CHECK(contains(ok.out, "over F65537"));

  RunResult j = run_cli("certify -a 2 -b 2 -r 1 -t 4 --json");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"verdict\": \"certified\""));
  CHECK(contains(j.out, "\"target\": 10"));

  CHECK(run_cli("certify -a 2 -b 2 -r 0 -t 1").exit_code == 64);  // t < b
  CHECK(run_cli("certify -a 2 -b 2 -r 1 -t 4 --prime 6").exit_code == 64);
}

TEST_CASE("certify exports the witness matrix") {
  const char* path = "cli_witness.mtx";
  std::remove(path);
  RunResult r = run_cli(std::string("certify -a 2 -b 2 -r 1 -t 4 --export-matrix ") + path);
  CHECK(r.exit_code == 0);
  std::string mm = slurp(path);
  CHECK(mm.rfind("%%MatrixMarket matrix coordinate integer general\n12 10 ", 0) == 0);
  std::remove(path);
}

TEST_CASE("prime resolution from the environment") {
  RunResult env = run_cli("certify -a 2 -b 2 -r 0 -t 2 --trials 8 --no-escalate",
                          "BIMULCON_PRIME=97");
  CHECK(env.exit_code == 0);
  CHECK(contains(env.out, "over F97"));

  RunResult overridden = run_cli("certify -a 2 -b 2 -r 0 -t 2 --prime 101 --no-escalate",
                                 "BIMULCON_PRIME=97");
  CHECK(contains(overridden.out, "over F101"));

  CHECK(run_cli("certify -a 2 -b 2 -r 1 -t 4", "BIMULCON_PRIME=banana").exit_code == 64);
}

TEST_CASE("scan writes reports") {
  const char* jpath = "cli_scan.json";
  const char* cpath = "cli_scan.csv";
  std::remove(jpath);
  std::remove(cpath);
  RunResult r = run_cli(std::string("scan --a 2:3 --b 2:2 --r 0:1 --t b+0:b+1 --json ") +
                        jpath + " --csv " + cpath);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "8 cells, 8 certified, 0 inconclusive, 0 errors"));
  std::string json = slurp(jpath);
  CHECK(contains(json, "\"summary\""));
  CHECK(contains(json, "\"version\": \"0.1.0\""));
  std::string csv = slurp(cpath);
  CHECK(csv.rfind("a,b,r,t,prime,seed,rank,target,verdict,ms\n", 0) == 0);
  std::remove(jpath);
  std::remove(cpath);

  RunResult stdout_json = run_cli("scan --a 2:2 --b 2:2 --r 0:0 --t b --json -");
  CHECK(stdout_json.exit_code == 0);
  CHECK(stdout_json.out.rfind("{", 0) == 0);

  CHECK(run_cli("scan --a 3:2").exit_code == 64);
}

TEST_CASE("cohomology") {
  RunResult r = run_cli("cohomology -a 3 -b 3 -h 3 -k -3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "h0=0 h1=3"));
  CHECK(contains(r.out, "route direct"));

  RunResult q = run_cli("cohomology -a 3 -b 3 -h 3 -k -3 --rationals");
  CHECK(q.exit_code == 0);
  CHECK(contains(q.out, "h0=0 h1=3"));
  CHECK(contains(q.out, "over Q"));

  RunResult j = run_cli("cohomology -a 2 -b 3 -h -3 -k 4 --json");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"route\": \"swap_rulings\""));

  RunResult deg = run_cli("cohomology -a 2 -b 2 -h 3 -k -3 --curve line-degenerate");
  CHECK(deg.exit_code == 0);
  CHECK(number_after(deg.out, "h0=") >= 2);

  CHECK(run_cli("cohomology -a 2 -b 2 -h 1 -k -1").exit_code == 64);  // unreachable twist
}

TEST_CASE("reduce") {
  RunResult j = run_cli("reduce -a 2 -b 2 -h 5 -k -2 --json");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"kind\": \"corner\""));
  CHECK(contains(j.out, "\"step\": \"serre_dual_swap\""));
  CHECK(contains(j.out, "\"step\": \"grow\""));

  RunResult h = run_cli("reduce -a 2 -b 2 -h 5 -k -2");
  CHECK(h.exit_code == 0);
  CHECK(contains(h.out, "classify (a=2, b=2, h=5, k=-2): corner"));
  CHECK(contains(h.out, "serre_dual_swap -> (a=2, b=2, h=2, k=-5)"));

  RunResult nc = run_cli("reduce -a 2 -b 2 -h 1 -k 0");
  CHECK(nc.exit_code == 0);
  CHECK(contains(nc.out, "non-critical (dual side)"));
}

TEST_CASE("grid-curve") {
  RunResult q = run_cli("grid-curve -a 2 -b 2 --rationals");
  CHECK(q.exit_code == 0);
  CHECK(contains(q.out, "smoothness certificate: certified"));
  CHECK(contains(q.out, "h0=0 h1=0"));
  CHECK(contains(q.out, "8x8"));

  CHECK(run_cli("grid-curve -a 2 -b 2 -m 1").exit_code == 64);
}

TEST_CASE("verify-z") {
  RunResult r = run_cli("verify-z -a 3 -b 3 --alpha 0 --beta 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "case graph"));
  CHECK(contains(r.out, "verified"));

  RunResult j = run_cli("verify-z -a 3 -b 3 --alpha 0 --beta 1 --json --rationals");
  CHECK(j.exit_code == 0);
  CHECK(contains(j.out, "\"verified\": true"));

  CHECK(run_cli("verify-z -a 3 -b 3 --alpha 1 --beta 1").exit_code == 64);
}
