#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

// Runs the installed binary (path in SPINHURWITZ_CLI) with stderr dropped.
CliResult run_cli(const std::string& args) {
  const char* binary = std::getenv("SPINHURWITZ_CLI");
  REQUIRE_MESSAGE(binary != nullptr, "SPINHURWITZ_CLI must point at the CLI binary");
  const std::string command = std::string(binary) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string value_text(const json& v) {
  return v["value"]["numerator"].get<std::string>() + "/" +
         v["value"]["denominator"].get<std::string>();
}

}  // namespace

TEST_CASE("spin3 reports all methods with agreement") {
  const CliResult r = run_cli("spin3 -g 2 --k 0");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["query"]["genus"] == 2);
  CHECK(out["query"]["insertions"] == 0);
  CHECK(out["query"]["parity"] == "+");
  CHECK(out["agreement"] == true);
  REQUIRE(out["results"].size() == 3);
  for (const json& entry : out["results"]) {
    CHECK(value_text(entry) == "27/1");
  }
  CHECK(out["results"][0]["method"] == "closed");
}

TEST_CASE("spin3 single-method output omits agreement") {
  const CliResult r = run_cli("spin3 -g 1 --parity - --k 1 --method eop");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  REQUIRE(out["results"].size() == 1);
  CHECK(out["results"][0]["method"] == "eop");
  CHECK(value_text(out["results"][0]) == "-3/1");
  CHECK_FALSE(out.contains("agreement"));
}

TEST_CASE("spin3 rational value at genus 0") {
  const CliResult r = run_cli("spin3 -g 0 --k 0 --method closed");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(value_text(out["results"][0]) == "1/6");
}

TEST_CASE("spin3 domain errors exit with 2") {
  CHECK(run_cli("spin3 -g 0 --parity -").exit_code == 2);
  CHECK(run_cli("spin3 -g 2 --method eop").exit_code == 2);
  CHECK(run_cli("spin3 -g 1 --method transfer").exit_code == 2);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli("spin3").exit_code == 1);                       // missing --genus
  CHECK(run_cli("nonsense").exit_code == 1);                    // unknown command
  CHECK(run_cli("spin3 -g 1 --parity x").exit_code == 1);       // bad parity
  CHECK(run_cli("spin3 -g 1 --method fancy").exit_code == 1);   // bad method
  CHECK(run_cli("").exit_code == 1);                            // subcommand required
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("hurwitz runs both oracles") {
  const CliResult r = run_cli("hurwitz -d 3 -g 0 --profile 3 --profile 3 --profile 3");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["agreement"] == true);
  REQUIRE(out["results"].size() == 2);
  CHECK(out["results"][0]["method"] == "burnside");
  CHECK(out["results"][1]["method"] == "monodromy");
  CHECK(value_text(out["results"][0]) == "1/3");
  CHECK(value_text(out["results"][1]) == "1/3");
}

TEST_CASE("hurwitz accepts power syntax for profiles") {
  const CliResult r = run_cli("hurwitz -d 3 -g 1 --profile 1^3 --method burnside");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["query"]["profiles"][0] == "1,1,1");
  CHECK(value_text(out["results"][0]) == "3/1");
}

TEST_CASE("hurwitz rejects odd total branching") {
  CHECK(run_cli("hurwitz -d 2 -g 0 --profile 2").exit_code == 2);
}

TEST_CASE("hurwitz profile of the wrong size is a domain error") {
  CHECK(run_cli("hurwitz -d 3 -g 0 --profile 2").exit_code == 2);
}

TEST_CASE("malformed profile text is a usage error") {
  CHECK(run_cli("hurwitz -d 3 -g 0 --profile x").exit_code == 1);
}

TEST_CASE("budget exhaustion exits with 4") {
  CHECK(run_cli("hurwitz -d 3 -g 1 --profile 3 --budget 10").exit_code == 4);
  CHECK(run_cli("hurwitz -d 3 -g 1 --profile 3 --budget 216").exit_code == 0);
}

TEST_CASE("environment budget is honored and overridden by the flag") {
  const char* binary = std::getenv("SPINHURWITZ_CLI");
  REQUIRE(binary != nullptr);
  CliResult r;
  {
    const std::string cmd = "env SPINHURWITZ_BUDGET=10 " + std::string(binary) +
                            " hurwitz -d 3 -g 1 --profile 3 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (fread(buffer, 1, sizeof buffer, pipe) > 0) {
    }
    r.exit_code = WEXITSTATUS(pclose(pipe));
  }
  CHECK(r.exit_code == 4);
  {
    const std::string cmd = "env SPINHURWITZ_BUDGET=10 " + std::string(binary) +
                            " hurwitz -d 3 -g 1 --profile 3 --budget 1000000 >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  }
  {
    const std::string cmd = "env SPINHURWITZ_BUDGET=abc " + std::string(binary) +
                            " hurwitz -d 3 -g 1 --profile 3 >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 1);
  }
}

TEST_CASE("table emits the documented CSV") {
  const CliResult r = run_cli("table --h-max 1 --k-max 2");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output ==
        "h,parity,k,numerator,denominator\n"
        "0,+,0,1,6\n"
        "0,+,1,0,1\n"
        "0,+,2,1,3\n"
        "1,+,0,2,1\n"
        "1,+,1,-1,1\n"
        "1,+,2,5,1\n"
        "1,-,0,0,1\n"
        "1,-,1,-3,1\n"
        "1,-,2,3,1\n");
}

TEST_CASE("table output is deterministic") {
  const CliResult first = run_cli("table --h-max 3 --k-max 8");
  const CliResult second = run_cli("table --h-max 3 --k-max 8");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("table json rows") {
  const CliResult r = run_cli("table --h-max 2 --k-max 1 --format json");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  REQUIRE(out["rows"].size() == 10);  // (1 + 2 + 2 parities) * 2 insertion counts
  CHECK(out["rows"][0]["h"] == 0);
  CHECK(out["rows"][0]["value"]["numerator"] == "1");
  CHECK(out["rows"][0]["value"]["denominator"] == "6");
  json last = out["rows"][out["rows"].size() - 1];
  CHECK(last["h"] == 2);
  CHECK(last["parity"] == "-");
  CHECK(last["k"] == 1);
  // 9 * ((-1) * 2^2 - 1)
  CHECK(last["value"]["numerator"] == "-45");
}

TEST_CASE("series transform and round trip through the CLI") {
  const CliResult forward = run_cli("series --direction disconnected 1 1/2 4/3");
  REQUIRE(forward.exit_code == 0);
  const json out = json::parse(forward.output);
  REQUIRE(out.size() == 3);
  CHECK(out[0]["numerator"] == "1");
  CHECK(out[1]["numerator"] == "1");
  CHECK(out[1]["denominator"] == "1");
  CHECK(out[2]["numerator"] == "2");

  const CliResult back = run_cli("series --direction connected 1 1 2");
  REQUIRE(back.exit_code == 0);
  const json inverse = json::parse(back.output);
  CHECK(inverse[1]["numerator"] == "1");
  CHECK(inverse[1]["denominator"] == "2");
  CHECK(inverse[2]["numerator"] == "4");
  CHECK(inverse[2]["denominator"] == "3");

  CHECK(run_cli("series --direction disconnected").output == "[]\n");
  CHECK(run_cli("series --direction disconnected 1/x").exit_code == 1);
  CHECK(run_cli("series --direction sideways 1").exit_code == 1);
}

TEST_CASE("check suites pass and report JSON") {
  const CliResult r = run_cli("check --suite spin");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.output);
  CHECK(out["passed"] == true);
  CHECK(out["suite"] == "spin");
  for (const json& entry : out["checks"]) {
    CHECK(entry["passed"] == true);
  }
}
