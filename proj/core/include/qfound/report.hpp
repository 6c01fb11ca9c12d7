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
#include <string>
#include <vector>

namespace qfound {

/// One numeric witness of a check: the indices involved and a residual.
/// `ok == false` marks a violation.
struct Witness {
  std::vector<std::size_t> indices;
  double residual = 0.0;
  bool ok = true;
  std::string detail;
};

struct VerificationReport {
  std::string check;
  double tolerance = 0.0;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;

  /// True iff no witness is a violation.
  bool passed() const;
  std::size_t violations() const;
  /// Largest residual over violating witnesses, or over all if none violate.
  double worst_residual() const;

  void add(Witness w) { witnesses.push_back(std::move(w)); }
  void note(std::string text) { notes.push_back(std::move(text)); }

  /// Merges the witnesses and notes of another report of the same check.
  void merge(const VerificationReport& other);
};

/// Single-line human summary: "<check> PASS|FAIL tol=... witnesses=... worst=...".
std::string summary_line(const VerificationReport& report);

}  // namespace qfound
