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

// Table file format: a single JSON object
//
//   {"labels": ["x", "x'", ...], "p": [[1.0, 0.0, ...], ...]}
//
// with `p` row-major. Doubles are written in shortest round-trip form, so a
// save/load cycle reproduces every entry bit for bit.
//
// Operator files use the same layout with a complex matrix field
//
//   {"h": [[[re, im], [re, im]], ...], "initial": [[re, im], ...]}
//
// where `initial` is optional.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "qfound/ptable.hpp"

namespace qfound {

/// Malformed or semantically invalid input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kLoadSymmetryTolerance = 1e-12;

struct LoadOptions {
  /// Accept tables whose asymmetry exceeds kLoadSymmetryTolerance. The table
  /// is kept as written; Axiom I reports the asymmetry.
  bool tolerate_asymmetry = false;
};

PTable parse_ptable(std::string_view text, LoadOptions options = {});
PTable load_ptable(const std::filesystem::path& path, LoadOptions options = {});

std::string serialize_ptable(const PTable& t);
void save_ptable(const PTable& t, const std::filesystem::path& path);

struct OperatorFile {
  Eigen::MatrixXcd h;
  std::optional<Eigen::VectorXcd> initial;
};

OperatorFile parse_operator(std::string_view text);
OperatorFile load_operator(const std::filesystem::path& path);
std::string serialize_operator(const OperatorFile& op);

}  // namespace qfound
