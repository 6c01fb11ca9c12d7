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

#include "qfound/ptable_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qfound {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::complex<double> parse_complex(const json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError("complex entry must be a [re, im] pair of numbers");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

PTable parse_ptable(std::string_view text, LoadOptions options) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("table file must contain a single object");
  if (!doc.contains("labels") || !doc["labels"].is_array()) {
    throw ParseError("table file lacks a 'labels' array");
  }
  if (!doc.contains("p") || !doc["p"].is_array()) throw ParseError("table file lacks a 'p' array");

  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw ParseError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc["p"]) {
    if (!row.is_array()) throw ParseError("'p' must be an array of arrays");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw ParseError("'p' entries must be numbers");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  PTable t;
  try {
    t = PTable(std::move(labels), rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (!options.tolerate_asymmetry && t.max_asymmetry() > kLoadSymmetryTolerance) {
    throw ParseError("table is asymmetric (max |p(i,j) - p(j,i)| = " +
                     std::to_string(t.max_asymmetry()) + "); pass --tolerate to load anyway");
  }
  return t;
}

PTable load_ptable(const std::filesystem::path& path, LoadOptions options) {
  return parse_ptable(read_file(path), options);
}

std::string serialize_ptable(const PTable& t) {
  json doc;
  doc["labels"] = t.labels();
  doc["p"] = t.rows();
  return doc.dump() + "\n";
}

void save_ptable(const PTable& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << serialize_ptable(t);
}

OperatorFile parse_operator(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("h") || !doc["h"].is_array()) {
    throw ParseError("operator file must be an object with an 'h' matrix");
  }
  const auto& h = doc["h"];
  const auto n = static_cast<Eigen::Index>(h.size());
  if (n == 0) throw ParseError("operator matrix is empty");
  OperatorFile op;
  op.h.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = h[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError("operator matrix is not square");
    }
    for (Eigen::Index j = 0; j < n; ++j) op.h(i, j) = parse_complex(row[static_cast<std::size_t>(j)]);
  }
  if (doc.contains("initial")) {
    const auto& v = doc["initial"];
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != n) {
      throw ParseError("'initial' must have one [re, im] entry per row of 'h'");
    }
    Eigen::VectorXcd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = parse_complex(v[static_cast<std::size_t>(i)]);
    op.initial = x;
  }
  return op;
}

OperatorFile load_operator(const std::filesystem::path& path) {
  return parse_operator(read_file(path));
}

std::string serialize_operator(const OperatorFile& op) {
  json doc;
  json h = json::array();
  for (Eigen::Index i = 0; i < op.h.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < op.h.cols(); ++j) row.push_back({op.h(i, j).real(), op.h(i, j).imag()});
    h.push_back(std::move(row));
  }
  doc["h"] = std::move(h);
  if (op.initial) {
    json v = json::array();
    for (Eigen::Index i = 0; i < op.initial->size(); ++i)
      v.push_back({(*op.initial)(i).real(), (*op.initial)(i).imag()});
    doc["initial"] = std::move(v);
  }
  return doc.dump() + "\n";
}

}  // namespace qfound
