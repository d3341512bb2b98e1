#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

// Drives the installed binary end to end; the path comes from the build.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + WEYLBRAID_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expected_exit,
                        const std::string& env = "") {
  const RunResult r = run(args, env);
  INFO("command: " << args << "\noutput: " << r.output);
  CHECK(r.exit_code == expected_exit);
  return nlohmann::json::parse(r.output);
}

}  // namespace

TEST_CASE("documented examples") {
  const nlohmann::json folded = run_json("fold --type E6 --auto z2", 0);
  CHECK(folded["kind"] == "F4");
  CHECK(folded["rank"] == 4);

  const nlohmann::json equal =
      run_json("artin equal --type A2 --a \"1 2 1\" --b \"2 1 2\"", 0);
  CHECK(equal == nlohmann::json{{"equal", true}});

  const nlohmann::json rejected = run_json("fold --type A4 --auto z2", 2);
  CHECK(rejected.contains("error"));
  CHECK(rejected["error"]["code"] == "fold_error");
  CHECK(rejected["error"]["message"].get<std::string>().find("adjacent") !=
        std::string::npos);
}

TEST_CASE("exit codes and JSON on every path") {
  // usage errors: unknown verb, missing required option
  for (const std::string bad : {"frobnicate", "fold", "weyl element --type A2"}) {
    const nlohmann::json j = run_json(bad, 1);
    CHECK(j["error"]["code"] == "usage_error");
  }

  // domain errors carry the structured object
  const nlohmann::json dom = run_json("diagram --type B2", 2);
  CHECK(dom["error"]["code"] == "classification_error");

  // help is JSON and enumerates every verb
  const nlohmann::json help = run_json("--help", 0);
  for (const std::string verb : {"diagram", "fold", "affinize", "kodaira", "weyl",
                                 "artin", "lattice", "bfield", "defmodel", "verify"})
    CHECK(help["verbs"].contains(verb));
  CHECK(run_json("", 0)["verbs"].contains("fold"));
}

TEST_CASE("verbs round trip through the library") {
  CHECK(run_json("affinize --type A2", 0)["kind"] == "A2~");
  CHECK(run_json("kodaira --fiber I5", 0)["kind"] == "A4~");
  CHECK(run_json("weyl enumerate --type F4", 0)["order"] == 1152);
  CHECK(run_json("weyl equal --type C2 --a \"1 2 1 2\" --b \"2 1 2 1\"", 0)["equal"] ==
        true);
  CHECK(run_json("artin equal --type C2 --a \"1 2 1\" --b \"2 1 2\"", 0)["equal"] ==
        false);

  const nlohmann::json nf = run_json("artin normal-form --type A2 --word \"1 1\"", 0);
  CHECK(nf["delta_power"] == 0);
  CHECK(nf["factors"] == nlohmann::json::parse("[[1],[1]]"));

  const nlohmann::json emb =
      run_json("lattice embed --type A1 --gram \"[[0,1],[1,0]]\"", 0);
  CHECK(emb["classes"] == nlohmann::json::parse("[[1,-1]]"));

  const nlohmann::json bf =
      run_json("bfield enhanced --type A2 --field \"1/3,2/3\"", 0);
  CHECK(bf["enhanced"] == true);

  const nlohmann::json census =
      run_json("defmodel census --type A2 --genus 2 --point \"1,3\"", 0);
  CHECK(census["surfaces"].empty());
  CHECK(census["curves"].size() == 3);

  const nlohmann::json rel = run_json(
      "defmodel orbit-relation --type A2 --genus 2 --point \"1,3\" --word 1", 0);
  CHECK(rel["relation"] == "birational");
  CHECK(rel["count_each"] == 2);
}

TEST_CASE("verification suites and budget overrides") {
  const nlohmann::json rep = run_json("verify kodaira", 0);
  CHECK(rep["suite"] == "kodaira");
  CHECK(rep["all_passed"] == true);

  CHECK(run_json("verify nonsense", 2)["error"]["code"] == "invalid_argument");

  // the environment variable caps enumerations; an explicit flag wins
  CHECK(run_json("weyl enumerate --type C3", 2,
                 "WEYLBRAID_BUDGET=10")["error"]["code"] == "budget_exceeded");
  CHECK(run_json("weyl enumerate --type C3 --cap 100", 0,
                 "WEYLBRAID_BUDGET=10")["order"] == 48);
  CHECK(run_json("weyl enumerate --type C3", 2,
                 "WEYLBRAID_BUDGET=oops")["error"]["code"] == "invalid_argument");
}

TEST_CASE("human rendering is text, JSON otherwise") {
  const RunResult human = run("weyl roots --type A2 --human");
  CHECK(human.exit_code == 0);
  CHECK_FALSE(nlohmann::json::accept(human.output));
  CHECK(human.output.find("positive") != std::string::npos);

  const RunResult plain = run("weyl roots --type A2");
  CHECK(plain.exit_code == 0);
  CHECK(nlohmann::json::parse(plain.output)["positive"].size() == 3);
}
