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

#include <fstream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qfound/report.hpp"

namespace qfound::cli {

/// Bad flags, unreadable files and similar: exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Six decimals, the default for human-readable output.
std::string f6(double x);

/// Round-trip precision for CSV and object output.
std::string full(double x);

nlohmann::json to_json(const VerificationReport& r);

/// Prints the summary line of a report, then its violations and notes
/// indented below it.
void print_report(std::ostream& os, const VerificationReport& r);

/// `--out PATH` if given, else the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback);
  std::ostream& stream() { return file_ ? *file_ : fallback_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream& fallback_;
};

}  // namespace qfound::cli
