#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>

#include "evoalg/io.hpp"

using json = nlohmann::json;

namespace {

const std::string kCli = EVOALG_CLI_PATH;
const std::string kData = TEST_DATA_DIR;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_raw(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunResult run(const std::string& args) {
  return run_raw(kCli + " " + args + " 2>&1");
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze reports the class invariants") {
  const RunResult r = run("analyze " + kData + "/e1_n5.json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "nilindex: 17"));
  CHECK(contains(r.output, "I_A: {(1,3), (1,4)}"));
  CHECK(contains(r.output, "eta: 2"));

  const RunResult z = run("analyze " + kData + "/zero3.json");
  CHECK(z.exit_code == 0);
  CHECK(contains(z.output, "nilindex: 2"));
  CHECK(contains(z.output, "max-nilindex form: no"));

  const RunResult c = run("analyze " + kData + "/chain4.json");
  CHECK(c.exit_code == 0);
  CHECK(contains(c.output, "nilindex: 9"));
  CHECK(contains(c.output, "max-nilindex form: yes"));
  CHECK(contains(c.output, "I_A: {}"));
}

TEST_CASE("derivations --method both prints the oracle comparison") {
  const RunResult r =
      run("derivations " + kData + "/e1_n5.json --method both");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "dim Der(E): 1"));
  CHECK(contains(r.output, "MATCH"));
}

TEST_CASE("isomorphic distinguishes Example 5.3") {
  const RunResult r =
      run("isomorphic " + kData + "/e1_n5.json " + kData + "/e2_n5.json");
  CHECK(r.exit_code == 4);
  CHECK(contains(r.output, "NOT ISOMORPHIC"));

  const RunResult same =
      run("isomorphic " + kData + "/e1_n5.json " + kData + "/e1_n5.json");
  CHECK(same.exit_code == 0);
  CHECK(contains(same.output, "ISOMORPHIC"));
}

TEST_CASE("check dispatches all kinds with the exit-code contract") {
  const std::string e1 = kData + "/e1_n5.json";
  const std::string map = kData + "/map_e15.json";
  for (const char* kind :
       {"derivation", "local-derivation", "2local"}) {
    const RunResult r =
        run("check " + e1 + " --map " + map + " --kind " + kind);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "ACCEPTED"));
  }
  const RunResult bad = run("check " + kData + "/n3_a13.json --map " + kData +
                            "/map_e21_n3.json --kind 2local");
  CHECK(bad.exit_code == 4);
  CHECK(contains(bad.output, "REJECTED"));
}

TEST_CASE("reconstruct round trips through derivations") {
  const std::string out = std::string(TEST_TMP_DIR) + "/recon.json";
  const RunResult r = run("reconstruct --spec " + kData +
                          "/spec_n4.json --subdiag 1,1,1 -o " + out);
  CHECK(r.exit_code == 0);
  const evoalg::EvolutionAlgebra E = evoalg::load_algebra(out);
  CHECK(E.A(0, 3) == 1);
  CHECK(E.A(1, 3) == 1);
  const auto spec = evoalg::load_spec(kData + "/spec_n4.json");
  const auto recovered = evoalg::derivation_spec_of(
      evoalg::derivations_closed_form(E));
  REQUIRE(recovered.size() == spec.d.size());
  for (size_t i = 0; i < spec.d.size(); ++i)
    CHECK(recovered[i] == spec.d[i]);
}

TEST_CASE("parse and precondition failures use distinct exit codes") {
  CHECK(run("analyze /no/such/file.json").exit_code == 2);
  CHECK(run("derivations " + kData + "/zero3.json --method closed")
            .exit_code == 3);
}

TEST_CASE("JSON reports are schema-shaped and deterministic") {
  const std::string cmd = "--json --seed 5 analyze " + kData + "/e1_n5.json";
  const RunResult r1 = run(cmd);
  const RunResult r2 = run(cmd);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);

  const json report = json::parse(r1.output);
  for (const char* key : {"tool", "command", "inputs", "seed", "results"})
    CHECK(report.contains(key));
  CHECK(report["tool"]["name"] == "evoalg");
  CHECK(report["command"] == "analyze");
  CHECK(report["seed"] == 5);
  CHECK(report["results"]["nilindex"] == 17);
  CHECK(report["results"]["eta"] == "2");
  for (const auto& input : report["inputs"]) {
    CHECK(input.contains("path"));
    CHECK(input["digest"].get<std::string>().rfind("fnv1a:", 0) == 0);
  }
}

TEST_CASE("EVOALG_SEED is the fallback seed") {
  const RunResult r = run_raw("EVOALG_SEED=9 " + kCli + " --json analyze " +
                              kData + "/e1_n5.json 2>&1");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.output)["seed"] == 9);
}

TEST_CASE("rationals serialize as strings in JSON output") {
  const RunResult r =
      run("--json derivations " + kData + "/e1_n5.json --method closed");
  CHECK(r.exit_code == 0);
  const json report = json::parse(r.output);
  const auto& gens = report["results"]["generators"];
  REQUIRE(gens.size() == 1);
  CHECK(gens[0][0][4] == "1");  // E_15 entry, as a string
}
