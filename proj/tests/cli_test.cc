// Copyright 2026 The invsg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(INVSG_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, int expect) {
  auto r = run("--format json " + args);
  CHECK_MESSAGE(r.code == expect, r.out);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("cli census") {
  auto j = run_json("census -n 3", 0);
  CHECK(j["semigroups_up_to_iso"] == 24);
  CHECK(j["involution_semigroups"] == 15);
  CHECK(j["nontrivial_involution"] == 3);
}

TEST_CASE("cli check") {
  auto holds = run_json("check --model a0 --lhs 'xyx*' --rhs 'xy*x*'", 0);
  CHECK(holds["holds"] == true);
  CHECK(holds["certificate"]["kind"] == "CanonicalMatch");
  auto fails = run_json("check --model a0 --lhs xy --rhs yx", 1);
  CHECK(fails["holds"] == false);
  CHECK(fails["counterexample"] == "x=1 y=3");
  auto zero = run_json("check --model b0 --lhs 'xx*' --rhs 'x*x'", 0);
  CHECK(zero["certificate"]["kind"] == "BothZero");
  CHECK(run("check --model a0 --lhs 'xx*x' --rhs 0").code == 0);
  CHECK(run("check --model a0 --lhs 'x(y' --rhs x").code == 2);
  CHECK(run("check --model nosuch --lhs x --rhs x").code == 2);
}

TEST_CASE("cli validate and classify") {
  CHECK(run("validate 'n=4 mul=2212222222321214 inv=1243'").code == 0);
  auto bad = run("validate 'n=2 mul=1122 inv=21'");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("(1,2)") != std::string::npos);
  auto b2 = run_json("classify --model b2", 0);
  CHECK(b2["verdict"] == "C4");
  auto c4 = run("classify --model a0 --condition C4");
  CHECK(c4.code == 1);
  CHECK(c4.out.find("T=1 x=3") != std::string::npos);
}

TEST_CASE("cli normalize and verify-trace") {
  auto dir = std::filesystem::temp_directory_path() / "invsg_cli_test";
  std::filesystem::create_directories(dir);
  auto trace = (dir / "t.json").string();
  auto r = run("normalize --system a0 'axbx*c' --trace-out " + trace);
  CHECK(r.code == 0);
  CHECK(r.out.find("ac*xbx*") != std::string::npos);
  CHECK(run("verify-trace --system a0 --model-check " + trace).code == 0);
  {
    std::ofstream out(dir / "bad.json");
    out << R"({"start":"xyx*","end":"xyx*","steps":[{"rule":"4b","dir":"->","pos":0,"subst":{"x":"x","y":"y"}}]})";
  }
  CHECK(run("verify-trace --system a0 " + (dir / "bad.json").string()).code == 1);
  CHECK(run("normalize --system a0 'xx*x'").code == 2);
  CHECK(run("canonical --system a0 'xy*x*'").out.find("xy*x*") !=
        std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("census -n 9").code == 2);
  CHECK(run("census -n 5").code == 2);
  CHECK(run("frobnicate").code == 2);
}
