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

#include "qfound/report.hpp"

#include <algorithm>
#include <cstdio>

namespace qfound {

bool VerificationReport::passed() const { return violations() == 0; }

std::size_t VerificationReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(witnesses.begin(), witnesses.end(), [](const Witness& w) { return !w.ok; }));
}

double VerificationReport::worst_residual() const {
  const bool any_bad = violations() > 0;
  double worst = 0.0;
  for (const auto& w : witnesses) {
    if (any_bad && w.ok) continue;
    worst = std::max(worst, w.residual);
  }
  return worst;
}

void VerificationReport::merge(const VerificationReport& other) {
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string summary_line(const VerificationReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %s tol=%.3g witnesses=%zu violations=%zu worst=%.6g",
                report.check.c_str(), report.passed() ? "PASS" : "FAIL", report.tolerance,
                report.witnesses.size(), report.violations(), report.worst_residual());
  return buf;
}

}  // namespace qfound
