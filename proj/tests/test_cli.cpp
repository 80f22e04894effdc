// Copyright 2026 The bilat Authors.
//
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

// Golden JSON output of the command line. Set BILAT_UPDATE_GOLDEN=1 to
// rewrite the expected files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "bilat/cli.hpp"
#include "corpus.hpp"

using namespace bilat;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string c(const std::string& name) { return testing::corpus_path(name); }

void golden(const std::string& name, const Result& r, int expected_code) {
  CHECK_MESSAGE(r.code == expected_code, r.err);
  const std::string path = std::string(BILAT_GOLDEN_DIR) + "/" + name + ".json";
  if (std::getenv("BILAT_UPDATE_GOLDEN")) {
    std::ofstream(path) << r.out;
    return;
  }
  std::ifstream f(path);
  REQUIRE_MESSAGE(f.good(), (std::string("missing golden file ") + path));
  std::stringstream want;
  want << f.rdbuf();
  CHECK(r.out == want.str());
  // A second run prints the same document.
  CHECK(parse_json(r.out) == parse_json(want.str()));
}

}  // namespace

TEST_CASE("golden json documents") {
  golden("derive", run({"derive", "--base", c("ex21.base.json"), "--goal", "r", "--polarity", "-", "--refutations", "q", "--json"}), 0);
  golden("derive_fail", run({"derive", "--base", c("ex21.base.json"), "--goal", "r", "--json"}), 1);
  golden("check_atomic", run({"check-atomic", "--base", c("ex21.base.json"), "--deduction", c("ex21_prove_s.deduction.json"), "--json"}), 0);
  golden("check_nd", run({"check-nd", "--proof", c("prop1_1.proof.json"), "--json"}), 0);
  golden("countermodel", run({"kripke-countermodel", "--formula", "p | (p -> bot)", "--polarity", "+", "--max-worlds", "2", "--json"}), 1);
  golden("simulate_build", run({"simulate-build", "--formula", "p -> q", "--json"}), 0);
  golden("support_item1", run({"bes-support", "--base", c("naive_item1.base.json"), "--formula", "bot", "--naive", "--atoms", "p,q,r", "--json"}), 0);
  golden("support_bot", run({"bes-support", "--base", c("ex21.base.json"), "--formula", "bot", "--json"}), 1);
  golden("harmony", run({"harmony", "--base", c("ex21.base.json"), "--formula", "r", "--polarity", "-", "--refutations", "q", "--json"}), 0);
  golden("dual_base", run({"dual", "--base", c("ex21.base.json"), "--json"}), 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"check-nd", "--proof", c("prop1_3.proof.json")}).out == "{bot}; ∅ ⊢− q\n");
  CHECK(run({"dual", "--formula", "p -> q & top"}).out == "q | bot <- p\n");
  CHECK(run({"bes-support", "--base", c("naive_item3.base.json"), "--formula", "p | q", "--naive", "--atoms", "p,q,r", "--budget", "1,1,1,0,40"}).code == 2);
  CHECK(run({"kripke-countermodel", "--formula", "p -> p", "--max-worlds", "3"}).code == 0);
  CHECK(run({"corpus-run", BILAT_CORPUS_DIR}).code == 0);

  Result missing = run({"check-nd", "--proof", "/nonexistent/x.json"});
  CHECK(missing.code == 3);
  CHECK(missing.err.find("/nonexistent/x.json") != std::string::npos);
  Result offset = run({"bes-support", "--base", c("ex21.base.json"), "--formula", "p & "});
  CHECK(offset.code == 3);
  CHECK(offset.err.find("offset 4") != std::string::npos);
  CHECK(run({"no-such-command"}).code == 3);
  CHECK(run({"derive", "--base", c("ex21.base.json")}).code == 3);
}

TEST_CASE("simulate round trip through files") {
  const fs::path dir = fs::temp_directory_path() / "bilat_cli_sim";
  fs::create_directories(dir);
  const std::string base = (dir / "u.json").string();
  REQUIRE(run({"simulate-build", "--formula", "p -> q", "--out", base}).code == 0);
  REQUIRE(fs::exists(base + ".map.json"));

  const std::string ded = (dir / "d.json").string();
  std::ofstream(ded) << R"({"kind":"rule","rule":"E(+),f_0","children":[{"kind":"assume","atom":"f_0","polarity":"+"},{"kind":"assume","atom":"p","polarity":"+"}]})";
  Result r = run({"simulate-translate", "--deduction", ded, "--map", base + ".map.json", "--json"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  Json j = parse_json(r.out);
  CHECK(j["faithful"] == true);
  CHECK(format_judgment(judgment_from_json(j["judgment"])) == "{p, p -> q}; ∅ ⊢+ q");

  Result fwd = run({"simulate-translate", "--proof", c("modus_ponens.proof.json"), "--json"});
  CHECK(fwd.code == 0);
  CHECK(parse_json(fwd.out)["faithful"] == true);
  fs::remove_all(dir);
}

TEST_CASE("corpus-run flags a corrupted proof") {
  const fs::path dir = fs::temp_directory_path() / "bilat_cli_corpus";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const char* f : {"identity.proof.json", "identity.expect.json", "and_elim.proof.json", "and_elim.expect.json"}) {
    fs::copy_file(c(f), dir / f);
  }
  CHECK(run({"corpus-run", dir.string()}).code == 0);
  std::ofstream(dir / "and_elim.proof.json") << R"({"kind":"assume","formula":"p","polarity":"+","label":0})";
  Result r = run({"corpus-run", dir.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL  and_elim.proof.json") != std::string::npos);
  fs::remove(dir / "identity.expect.json");
  CHECK(run({"corpus-run", dir.string()}).out.find("missing sidecar") != std::string::npos);
  fs::remove_all(dir);
}
