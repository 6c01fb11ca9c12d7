// Copyright 2026 The qfound Authors
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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "qfound/cli.hpp"
#include "qfound/ptable_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qfound");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = qfound::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (fs::path(QFOUND_TEST_DATA) / name).string(); }

std::string temp(const char* name) { return (fs::temp_directory_path() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: help and usage errors") {
  CHECK(invoke({"--help"}).code == qfound::cli::kExitPass);
  CHECK(invoke({}).code == qfound::cli::kExitInput);
  CHECK(invoke({"frobnicate"}).code == qfound::cli::kExitInput);
  CHECK(invoke({"demo", "nothing"}).code == qfound::cli::kExitInput);
  CHECK(invoke({"tables", "--format", "xml"}).code == qfound::cli::kExitInput);
  CHECK(invoke({"demo", "tvn", "--p", "1.5"}).code == qfound::cli::kExitInput);
  CHECK(invoke({"demo", "tvn", "--ring", "O"}).code == qfound::cli::kExitInput);
}

TEST_CASE("cli: tables") {
  const auto r = invoke({"tables"});
  CHECK(r.code == qfound::cli::kExitPass);
  CHECK(contains(r.out, "0.386294"));
  CHECK(contains(r.out, "0.583333"));
  CHECK(contains(r.out, "0.039721"));

  const auto csv = invoke({"tables", "--format", "csv"});
  CHECK(csv.out.rfind("rank,model,value\n", 0) == 0);
  CHECK(contains(csv.out, "2,information,0.5"));

  const auto bits = invoke({"tables", "--bits", "--format", "csv"});
  CHECK(contains(bits.out, "1,von_neumann,0\n"));
  CHECK(contains(invoke({"tables", "--bits", "--format", "object"}).out, "\"units\": \"bits\""));

  const auto obj = invoke({"tables", "--format", "object"});
  CHECK(contains(obj.out, "\"units\": \"nats\""));
  CHECK(contains(obj.out, "\"reference_difference\""));
}

TEST_CASE("cli: demo tvn") {
  const auto r = invoke({"demo", "tvn", "--p", "0.75"});
  CHECK(r.code == qfound::cli::kExitPass);
  CHECK(contains(r.out, "0.562335 -> 0.376770 PASS"));
  const auto low = invoke({"demo", "tvn", "--p", "0.25", "--ring", "H"});
  CHECK(low.code == qfound::cli::kExitPass);
  CHECK(contains(low.out, "c(a,b')"));
}

TEST_CASE("cli: demo zeno") {
  const auto r = invoke({"demo", "zeno", "--hamiltonian", data("sigma_x.json"), "--tau", "0.01",
                         "--steps", "100"});
  CHECK(r.code == qfound::cli::kExitPass);
  CHECK(contains(r.out, "p_n = 0.990050"));
  CHECK(contains(r.out, "bound_n = 0.990049"));
  CHECK(contains(r.out, "(in regime)"));

  const auto path = temp("qfound_cli_zeno.csv");
  const auto s = invoke({"demo", "zeno", "--seed", "4", "--dim", "3", "--stochastic", "--samples",
                         "2000", "--out", path});
  CHECK(s.code == qfound::cli::kExitPass);
  CHECK(contains(s.out, "stochastic fraction"));
  const auto csv = slurp(path);
  CHECK(csv.rfind("k,p_k,bound_k\n0,1", 0) == 0);
  fs::remove(path);

  CHECK(invoke({"demo", "zeno", "--tau", "0"}).code == qfound::cli::kExitInput);
  CHECK(invoke({"demo", "zeno", "--hamiltonian", data("missing.json")}).code ==
        qfound::cli::kExitInput);
}

TEST_CASE("cli: demo axiom5") {
  CHECK(invoke({"demo", "axiom5", "--ring", "C", "--samples", "20000"}).code ==
        qfound::cli::kExitPass);
  const auto r = invoke({"demo", "axiom5", "--ring", "R", "--samples", "20000"});
  CHECK(r.code == qfound::cli::kExitFail);
  CHECK(contains(r.out, "uniform:"));
  CHECK(invoke({"demo", "axiom5", "--samples", "10"}).code == qfound::cli::kExitInput);
}

TEST_CASE("cli: demo adjunction") {
  const auto csv = temp("qfound_cli_circle.csv");
  const auto table = temp("qfound_cli_circle.json");
  const auto r = invoke({"demo", "adjunction", "--depth", "3", "--out", csv, "--table-out", table});
  CHECK(r.code == qfound::cli::kExitPass);
  CHECK(contains(r.out, "points=16"));
  CHECK(contains(r.out, "contradicted=0"));
  CHECK(slurp(csv).rfind("label,angle,x0,x1,x2\n", 0) == 0);
  CHECK(qfound::load_ptable(table).size() == 16);
  fs::remove(csv);
  fs::remove(table);

  const auto r3 = invoke({"demo", "adjunction", "--depth", "2", "--rank", "3"});
  CHECK(contains(r3.out, "no division ring"));
  CHECK(invoke({"demo", "adjunction", "--theta0", "4"}).code == qfound::cli::kExitInput);
}

TEST_CASE("cli: check") {
  const auto so = invoke({"check", data("so.json")});
  CHECK(so.code == qfound::cli::kExitPass);
  CHECK(contains(so.out, "frames count=2"));
  CHECK(contains(so.out, "PASS (axiom four incomplete)"));

  const auto summary = invoke({"check", data("so.json"), "--summary"});
  CHECK(summary.out.rfind("summary PASS elements=4", 0) == 0);
  CHECK(std::count(summary.out.begin(), summary.out.end(), '\n') == 1);

  const auto obj = invoke({"check", data("so.json"), "--format", "object"});
  CHECK(contains(obj.out, "\"passed\": true"));

  const auto corrupt = invoke({"check", data("corrupt.json")});
  CHECK(corrupt.code == qfound::cli::kExitInput);
  CHECK(contains(corrupt.err, "error:"));
  CHECK(invoke({"check", data("missing.json")}).code == qfound::cli::kExitInput);
  CHECK(invoke({"check", data("so.json"), "--base", "99"}).code == qfound::cli::kExitInput);
}

TEST_CASE("cli: check reports violations with exit 1") {
  const auto path = temp("qfound_cli_bad.json");
  {
    std::ofstream f(path);
    f << R"({"labels": ["a", "b", "c"], "p": [[1, 0, 0.5], [0, 1, 0.2], [0.5, 0.2, 1]]})";
  }
  const auto r = invoke({"check", path});
  CHECK(r.code == qfound::cli::kExitFail);
  CHECK(contains(r.out, "FAIL"));
  fs::remove(path);
}

TEST_CASE("cli: generate and check round trip") {
  const auto path = temp("qfound_cli_mid.json");
  const auto g = invoke({"generate", "midpoints", "--count", "4", "--seed", "3", "--out", path});
  CHECK(g.code == qfound::cli::kExitPass);
  CHECK(contains(g.err, "# generate midpoints seed=3"));
  const auto c = invoke({"check", path, "--base", "4", "--summary"});
  CHECK(c.code == qfound::cli::kExitPass);
  CHECK(contains(c.out, "axiom_four=PASS"));
  fs::remove(path);

  const auto sk = invoke({"generate", "skeleton", "--rank", "2"});
  CHECK(sk.code == qfound::cli::kExitPass);
  CHECK(qfound::parse_ptable(sk.out).size() == 6);
  CHECK(invoke({"generate", "teapot"}).code == qfound::cli::kExitInput);
}

TEST_CASE("cli: output is byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"generate", "crqm", "--ring", "H", "--count", "6", "--seed", "9"},
        std::vector<std::string>{"generate", "hv", "--rank", "2", "--samples", "5000", "--workers", "3"},
        std::vector<std::string>{"demo", "zeno", "--seed", "8", "--stochastic", "--samples", "500"},
        std::vector<std::string>{"tables", "--format", "object"}}) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
