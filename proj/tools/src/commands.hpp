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

#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <string>

namespace qfound::cli {

struct TablesOptions {
  bool bits = false;
  std::string format = "text";
  std::string out;
  std::size_t nodes = 64;
};

struct CheckOptions {
  std::string path;
  double eps = 1e-9;
  std::string model;  // empty: no metric check
  bool tolerate = false;
  bool summary = false;
  std::size_t frame_cap = 64;
  std::string frames = "largest";  // or "all"
  std::size_t base = 0;            // Axiom IV among the first `base` elements; 0 = all
  std::string format = "text";
};

struct TvnOptions {
  double p = 0.75;
  std::string ring = "C";
};

struct ZenoOptions {
  double tau = 0.02;
  std::size_t steps = 100;
  std::string hamiltonian;
  std::size_t dim = 2;
  std::uint64_t seed = 1;
  bool stochastic = false;
  std::size_t samples = 10000;
  std::string out;
};

struct Axiom5Options {
  std::string ring = "C";
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
};

struct AdjunctionOptions {
  double theta0 = std::numbers::pi / 2;
  std::size_t depth = 3;
  int rank = 2;
  double eps = 1e-9;
  std::size_t frame_cap = 1100;
  std::string out;
  std::string table_out;
};

struct GenerateOptions {
  std::string kind;
  int rank = 1;
  std::string ring = "C";
  std::size_t dim = 2;
  std::size_t count = 8;
  std::size_t samples = 1000000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  double theta0 = std::numbers::pi / 2;
  std::size_t depth = 3;
  std::string out;
};

int cmd_tables(const TablesOptions& o, std::ostream& out);
int cmd_check(const CheckOptions& o, std::ostream& out);
int cmd_demo_tvn(const TvnOptions& o, std::ostream& out);
int cmd_demo_zeno(const ZenoOptions& o, std::ostream& out);
int cmd_demo_axiom5(const Axiom5Options& o, std::ostream& out);
int cmd_demo_adjunction(const AdjunctionOptions& o, std::ostream& out);
int cmd_generate(const GenerateOptions& o, std::ostream& out);

}  // namespace qfound::cli
