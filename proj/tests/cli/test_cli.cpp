// Drives the installed chainsemi binary end to end: output schemas,
// determinism, exit codes, and the environment hooks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string command =
      env + " " + std::string(CHAINSEMI_BIN) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("classify emits the profile, fix set and kernel") {
  const RunResult r = run_cli("classify --map \"n=4:[1,0,3,2]\"");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["profile"]["orientation_reversing"] == true);
  CHECK(j["profile"]["order_decreasing"] == true);
  CHECK(j["fix"] == json::array({1, 3}));
  CHECK(j["ord"] == 2);  // the reversing degree sits just below the upper fixed point
}

TEST_CASE("count reports match flags and exit accordingly") {
  const RunResult good = run_cli("count --n 4 --quantity idempotents --r 3");
  CHECK(good.exit_code == 0);
  const json j = json::parse(good.out);
  CHECK(j["enumerated_count"] == 8);
  CHECK(j["formula_value"] == 8);
  CHECK(j["match"] == true);

  // The closed form overcounts single-valued idempotents; the command
  // reports the mismatch and exits nonzero.
  const RunResult bad = run_cli("count --n 4 --quantity idempotents --r 1");
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.out)["match"] == false);
}

TEST_CASE("family output carries the formula and canonical elements") {
  const RunResult r = run_cli("family --n 4 --r 3 --label CLAIMED_PORD");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["count"] == 12);
  CHECK(j["formula_count"] == 12);
  CHECK(j["elements"].size() == 12);
}

TEST_CASE("hn-table emits CSV with a header row") {
  const RunResult r = run_cli("hn-table --n-max 7 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,r,count\n", 0) == 0);
  CHECK(r.out.find("5,3,6") != std::string::npos);
  CHECK(r.out.find("7,4,23") != std::string::npos);
}

TEST_CASE("closure against a class target") {
  const RunResult r = run_cli("closure --gens CLAIMED_PORD --n 4 --r 3 --target PORD --sample 3");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["size"] == 115);
  CHECK(j["generated_target"] == true);
  CHECK(j["elements_sample"].size() == 3);
}

TEST_CASE("factorize verifies its own output") {
  const RunResult r = run_cli("factorize --map \"n=7:[0,0,3,0,5,0,4]\" --r 4");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(j["m"] == 4);
  CHECK(j["p"] == 3);
  CHECK(j["gamma_source"]["family"] == "H_n^r");
}

TEST_CASE("byte-identical output for identical configuration") {
  const std::string cmd = "closure --gens CLAIMED_IORD --n 5 --r 4 --target IORD --workers 2";
  const RunResult a = run_cli(cmd);
  const RunResult b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const RunResult c = run_cli("hn-table --n-max 12 --format csv");
  const RunResult d = run_cli("hn-table --n-max 12 --format csv");
  CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("count --n 4 --quantity nonsense").exit_code == 2);
  CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
  CHECK(run_cli("maximal --side pord --n 5 --r 4").exit_code == 2);  // no action flag
  CHECK(run_cli("family --n 4 --r 3").exit_code == 2);               // missing --label
}

TEST_CASE("the enumeration cap is configurable through the environment") {
  const RunResult blocked = run_cli("count --n 6 --quantity class-size --class PD",
                                    "CHAINSEMI_CAP=5");
  CHECK(blocked.exit_code == 1);
  const RunResult allowed = run_cli("count --n 6 --quantity class-size --class PD",
                                    "CHAINSEMI_CAP=6");
  CHECK(allowed.exit_code == 0);
  CHECK(json::parse(allowed.out)["enumerated_count"] == 5040);
}

TEST_CASE("verify-all reflects outcomes in its exit status") {
  const RunResult ok = run_cli("verify-all --n 4");
  CHECK(ok.exit_code == 0);
  const json j = json::parse(ok.out);
  CHECK(j["failures"] == 0);
  CHECK(j["checks"].size() > 0);

  const RunResult injected = run_cli("verify-all --n 4", "CHAINSEMI_INJECT_FAIL=1");
  CHECK(injected.exit_code == 1);
  CHECK(json::parse(injected.out)["failures"] == 1);
}

TEST_CASE("maximal verification of one descriptor") {
  const RunResult r =
      run_cli("maximal --side pord --n 5 --r 4 --verify collapse-class:1,2");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["verified"].size() == 1);
  CHECK(j["verified"][0]["closed"] == true);
  CHECK(j["verified"][0]["maximal"] == true);
}
