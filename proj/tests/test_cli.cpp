// Copyright 2026 The crn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CRN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(CRN_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("analyze emits a verifying json report") {
  RunResult r = run_cli("analyze " + data("ab.crn") + " --verify");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["structure"]["deficiency"] == 0);
  CHECK(j["structure"]["weakly_reversible"] == true);
  CHECK(j["properties"]["endotactic"]["verdict"] == "pass");
  CHECK(j["verified"] == true);
}

TEST_CASE("analyze reports the conservation vector of an irreversible pair") {
  RunResult r = run_cli("analyze " + data("ab_forward.crn"));
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  auto vec = j["properties"]["conservative"]["vector"];
  REQUIRE(vec.is_array());
  CHECK(vec[0] == "1/1");
  CHECK(vec[1] == "1/1");
  CHECK(j["properties"]["endotactic"]["verdict"] == "fail");
}

TEST_CASE("equiv decides the split family") {
  CHECK(run_cli("equiv " + data("fig_split_a.crn") + " " + data("fig_split_b.crn")).exit_code == 0);
  CHECK(run_cli("equiv " + data("fig_split_a.crn") + " " + data("fig_split_c.crn")).exit_code == 0);
  CHECK(run_cli("equiv " + data("square_cycle.crn") + " " + data("square_diagonals.crn") +
                " --trials 25 --seed 4")
            .exit_code == 0);
  RunResult different = run_cli("equiv " + data("ab.crn") + " " + data("ab_forward.crn"));
  CHECK(different.exit_code == 1);
  auto j = nlohmann::json::parse(different.out);
  CHECK(j["equivalent"] == false);
  CHECK_FALSE(j["witness"].is_null());
}

TEST_CASE("equiv rejects mismatched species declarations") {
  RunResult r = run_cli("equiv " + data("ab.crn") + " " + data("type1.crn"));
  CHECK(r.exit_code == 3);
}

TEST_CASE("ghosts lists and eliminates") {
  RunResult r = run_cli("ghosts " + data("ghost_pentagon.crn"));
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["ghost_vertices"].size() == 1);
  CHECK(j["ghost_points"][0][0] == "1/2");
  CHECK(j["equivalent_to_input"] == true);
}

TEST_CASE("realize finds a conservative realization") {
  RunResult r = run_cli("realize " + data("ab.crn") + " --property conservative");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["found"] == true);
  REQUIRE(j.contains("conservation_vector"));

  RunResult none = run_cli("realize " + data("ab_forward.crn") + " --property wr");
  CHECK(none.exit_code == 1);
}

TEST_CASE("realize honors the dense-edge cap with exit code 2") {
  RunResult r = run_cli("realize " + data("square_cycle.crn") + " --property wr --max-edges 3");
  CHECK(r.exit_code == 2);
}

TEST_CASE("classify names the deficiency-one types") {
  auto type_of = [&](const std::string& f) {
    RunResult r = run_cli("classify " + data(f));
    REQUIRE(r.exit_code == 0);
    return nlohmann::json::parse(r.out)["type"].get<std::string>();
  };
  CHECK(type_of("square_cycle.crn") == "type-2");
  CHECK(type_of("type1.crn") == "type-1");
  CHECK(type_of("type3.crn") == "type-3");
  CHECK(type_of("ab.crn") == "not-applicable");
}

TEST_CASE("sweep reports a disposition") {
  RunResult r = run_cli("sweep " + data("ab.crn") + " --direction \"1,0\"");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["disposition"] == "pass");
  CHECK(j["min_support_value"] == "0/1");

  RunResult c = run_cli("sweep " + data("ab.crn") + " --direction \"1,1\"");
  CHECK(nlohmann::json::parse(c.out)["disposition"] == "continue");
}

TEST_CASE("output is byte-deterministic") {
  for (const char* cmd : {"analyze", "classify"}) {
    RunResult a = run_cli(std::string(cmd) + " " + data("square_cycle.crn") + " --seed 9 --trials 10");
    RunResult b = run_cli(std::string(cmd) + " " + data("square_cycle.crn") + " --seed 9 --trials 10");
    CHECK(a.out == b.out);
  }
}

TEST_CASE("text output mode") {
  RunResult r = run_cli("classify " + data("ab.crn") + " --output text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("type: not-applicable") != std::string::npos);
}

TEST_CASE("missing file and bad syntax exit nonzero") {
  CHECK(run_cli("analyze /nonexistent.crn").exit_code == 3);
  CHECK(run_cli("sweep " + data("ab.crn") + " --direction \"0,0\"").exit_code == 3);
}
