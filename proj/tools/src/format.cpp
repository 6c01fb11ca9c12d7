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

#include "format.hpp"

#include <cstdio>

namespace qfound::cli {

std::string f6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  // Avoid printing "-0.000000".
  if (std::string(buf) == "-0.000000") return "0.000000";
  return buf;
}

std::string full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["passed"] = r.passed();
  j["tolerance"] = r.tolerance;
  j["violations"] = r.violations();
  j["worst_residual"] = r.worst_residual();
  auto& ws = j["witnesses"] = nlohmann::json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back({{"indices", w.indices}, {"residual", w.residual}, {"ok", w.ok},
                  {"detail", w.detail}});
  }
  j["notes"] = r.notes;
  return j;
}

void print_report(std::ostream& os, const VerificationReport& r) {
  os << summary_line(r) << '\n';
  for (const auto& w : r.witnesses) {
    if (w.ok) continue;
    os << "  violation";
    for (auto i : w.indices) os << ' ' << i;
    os << " residual=" << f6(w.residual);
    if (!w.detail.empty()) os << " (" << w.detail << ')';
    os << '\n';
  }
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
}

Sink::Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
  if (path.empty() || path == "-") return;
  file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file_) throw InputError("cannot open '" + path + "' for writing");
}

}  // namespace qfound::cli
