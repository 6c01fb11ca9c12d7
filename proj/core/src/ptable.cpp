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

#include "qfound/ptable.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>

namespace qfound {

PTable::PTable(std::vector<std::string> labels, const std::vector<std::vector<double>>& rows)
    : labels_(std::move(labels)) {
  const std::size_t n = rows.size();
  if (labels_.size() != n) {
    throw std::invalid_argument("label count " + std::to_string(labels_.size()) +
                                " does not match row count " + std::to_string(n));
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate label '" + l + "'");
  }
  p_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw std::invalid_argument("p-table is not square: row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
    }
    for (double v : rows[i]) {
      if (!std::isfinite(v)) throw std::invalid_argument("p-table entry is not finite");
      if (v < -1e-12 || v > 1.0 + 1e-12) {
        throw std::invalid_argument("p-table entry " + std::to_string(v) + " outside [0,1]");
      }
      p_.push_back(std::clamp(v, 0.0, 1.0));
    }
  }
}

double PTable::at(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw std::out_of_range("p-table index out of range");
  return (*this)(i, j);
}

std::optional<std::size_t> PTable::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::vector<double>> PTable::rows() const {
  const std::size_t n = size();
  std::vector<std::vector<double>> out(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = (*this)(i, j);
  return out;
}

double PTable::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

PTable PTable::symmetrized() const {
  auto r = rows();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) r[i][j] = r[j][i] = 0.5 * (r[i][j] + r[j][i]);
  return {labels_, r};
}

bool Frame::contains(std::size_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

VerificationReport check_axiom_one(const PTable& t, double eps) {
  VerificationReport rep{"axiom_one", eps, {}, {}};
  const std::size_t n = t.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double diag = std::abs(t(i, i) - 1.0);
    worst = std::max(worst, diag);
    if (diag >= eps) rep.add({{i, i}, diag, false, "diagonal != 1"});
    for (std::size_t j = i + 1; j < n; ++j) {
      const double asym = std::abs(t(i, j) - t(j, i));
      worst = std::max(worst, asym);
      if (asym >= eps) rep.add({{i, j}, asym, false, "asymmetric"});
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        const double gap = 1.0 - t(a, b);
        if (gap < eps) rep.add({{a, b}, gap, false, "distinct elements with p = 1"});
      }
    }
  }
  if (rep.passed()) rep.add({{}, worst, true, "largest diagonal/symmetry residual"});
  return rep;
}

VerificationReport check_axiom_two(const PTable& t) {
  VerificationReport rep{"axiom_two", 0.0, {}, {}};
  rep.note("finite table of " + std::to_string(t.size()) +
           " elements is compact in the d-metric; nothing to test on data");
  return rep;
}

double d_metric(const PTable& t, std::size_t i, std::size_t j) {
  if (i >= t.size() || j >= t.size()) throw std::out_of_range("d_metric index out of range");
  double d = 0.0;
  for (std::size_t z = 0; z < t.size(); ++z) d = std::max(d, std::abs(t(i, z) - t(j, z)));
  return d;
}

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | o.words_[k];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~o.words_[k];
    return r;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        const int b = std::countr_zero(w);
        f(k * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

struct BronKerbosch {
  std::vector<Bits> neighbours;
  std::vector<std::vector<std::size_t>> cliques;
  std::size_t best = 0;
  bool collect = true;

  void run(std::vector<std::size_t>& r, Bits p, Bits x) {
    if (!p.any() && !x.any()) {
      best = std::max(best, r.size());
      if (collect) {
        auto c = r;
        std::sort(c.begin(), c.end());
        cliques.push_back(std::move(c));
      }
      return;
    }
    if (!collect && r.size() + p.count() <= best) return;
    // Pivot: vertex of P union X with the most neighbours in P.
    std::size_t pivot = 0;
    std::size_t pivot_score = 0;
    bool have_pivot = false;
    (p | x).for_each([&](std::size_t u) {
      const std::size_t s = (p & neighbours[u]).count();
      if (!have_pivot || s > pivot_score) {
        pivot = u;
        pivot_score = s;
        have_pivot = true;
      }
    });
    std::vector<std::size_t> candidates;
    p.minus(neighbours[pivot]).for_each([&](std::size_t v) { candidates.push_back(v); });
    for (std::size_t v : candidates) {
      r.push_back(v);
      run(r, p & neighbours[v], x & neighbours[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }
};

BronKerbosch make_search(const std::vector<std::vector<bool>>& adjacency) {
  const std::size_t n = adjacency.size();
  BronKerbosch bk;
  bk.neighbours.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency[i].size() != n) throw std::invalid_argument("adjacency matrix is not square");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && adjacency[i][j]) bk.neighbours[i].set(j);
  }
  return bk;
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(
    const std::vector<std::vector<bool>>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n == 0) return {};
  auto bk = make_search(adjacency);
  Bits all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  std::vector<std::size_t> r;
  bk.run(r, all, Bits(n));
  std::sort(bk.cliques.begin(), bk.cliques.end());
  return bk.cliques;
}

std::size_t maximum_clique_size(const std::vector<std::vector<bool>>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n == 0) return 0;
  auto bk = make_search(adjacency);
  bk.collect = false;
  Bits all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  std::vector<std::size_t> r;
  bk.run(r, all, Bits(n));
  return bk.best;
}

std::vector<Frame> enumerate_frames_in(const PTable& t, const std::vector<std::size_t>& subset,
                                       double eps, std::size_t max_elements) {
  if (subset.size() > max_elements) {
    throw TableTooLarge("frame enumeration over " + std::to_string(subset.size()) +
                        " elements exceeds the cap of " + std::to_string(max_elements));
  }
  const std::size_t m = subset.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      adj[a][b] = a != b && t.at(subset[a], subset[b]) < eps;
  std::vector<Frame> frames;
  for (auto& clique : maximal_cliques(adj)) {
    Frame f;
    for (auto k : clique) f.indices.push_back(subset[k]);
    std::sort(f.indices.begin(), f.indices.end());
    frames.push_back(std::move(f));
  }
  std::sort(frames.begin(), frames.end());
  return frames;
}

std::vector<Frame> enumerate_frames(const PTable& t, double eps, std::size_t max_elements) {
  std::vector<std::size_t> all(t.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return enumerate_frames_in(t, all, eps, max_elements);
}

std::vector<Frame> largest_frames(const std::vector<Frame>& frames) {
  std::size_t best = 0;
  for (const auto& f : frames) best = std::max(best, f.size());
  std::vector<Frame> out;
  for (const auto& f : frames) {
    if (f.size() == best) out.push_back(f);
  }
  return out;
}

std::vector<std::size_t> subspace_of(const PTable& t, const Frame& f, double eps) {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < t.size(); ++z) {
    double s = 0.0;
    for (auto j : f.indices) s += t(z, j);
    if (std::abs(s - 1.0) < eps) out.push_back(z);
  }
  return out;
}

VerificationReport check_axiom_three(const PTable& t, const std::vector<Frame>& frames,
                                     double eps) {
  VerificationReport rep{"axiom_three", eps, {}, {}};
  Witness worst{{}, 0.0, true, "largest frame-sum residual"};
  for (std::size_t f = 0; f < frames.size(); ++f) {
    for (std::size_t a = 0; a < t.size(); ++a) {
      double s = 0.0;
      for (auto j : frames[f].indices) s += t(a, j);
      const double res = std::abs(s - 1.0);
      if (res >= eps) {
        rep.add({{a, f}, res, false, "row does not sum to 1 over frame"});
      } else if (res >= worst.residual) {
        worst.indices = {a, f};
        worst.residual = res;
      }
    }
  }
  if (rep.passed()) rep.add(worst);
  rep.note(std::to_string(frames.size()) + " frames examined; witness indices are (element, frame)");
  return rep;
}

VerificationReport check_axiom_three(const PTable& t, double eps, std::size_t max_elements) {
  return check_axiom_three(t, enumerate_frames(t, eps, max_elements), eps);
}

namespace {

bool mutually_orthogonal(const PTable& t, const Frame& f, double eps) {
  for (auto i : f.indices)
    for (auto j : f.indices)
      if (i != j && t.at(i, j) >= eps) return false;
  return true;
}

}  // namespace

VerificationReport check_frame_equivalence(const PTable& t, const Frame& f1, const Frame& f2,
                                           double eps) {
  if (f1.indices.empty() || !mutually_orthogonal(t, f1, eps)) {
    throw std::invalid_argument("F1 is not a set of mutually orthogonal elements");
  }
  const auto sub = subspace_of(t, f1, eps);
  if (!mutually_orthogonal(t, f2, eps)) {
    throw std::invalid_argument("F2 is not a set of mutually orthogonal elements");
  }
  for (auto j : f2.indices) {
    if (!std::binary_search(sub.begin(), sub.end(), j)) {
      throw std::invalid_argument("F2 element '" + t.label(j) + "' is outside the subspace of F1");
    }
  }
  for (auto z : sub) {
    if (f2.contains(z)) continue;
    bool orth_all = true;
    for (auto j : f2.indices) orth_all = orth_all && t(z, j) < eps;
    if (orth_all) {
      throw std::invalid_argument("F2 is not maximal in the subspace of F1: '" + t.label(z) +
                                  "' is orthogonal to all of it");
    }
  }

  VerificationReport rep{"frame_equivalence", eps, {}, {}};
  if (f1.size() != f2.size()) {
    rep.add({{f1.size(), f2.size()},
             std::abs(static_cast<double>(f1.size()) - static_cast<double>(f2.size())),
             false,
             "frames differ in size"});
  }
  Witness worst{{}, 0.0, true, "largest row-sum difference"};
  for (std::size_t w = 0; w < t.size(); ++w) {
    double s1 = 0.0;
    double s2 = 0.0;
    for (auto j : f1.indices) s1 += t(w, j);
    for (auto j : f2.indices) s2 += t(w, j);
    const double res = std::abs(s1 - s2);
    if (res >= eps) {
      rep.add({{w}, res, false, "row sums differ"});
    } else if (res >= worst.residual) {
      worst.indices = {w};
      worst.residual = res;
    }
  }
  if (rep.passed()) rep.add(worst);
  rep.note("subspace of F1 has " + std::to_string(sub.size()) + " elements");
  return rep;
}

std::string_view to_string(AxiomFourOutcome outcome) noexcept {
  switch (outcome) {
    case AxiomFourOutcome::Witnessed: return "witness found";
    case AxiomFourOutcome::NoCandidate: return "no candidate";
    case AxiomFourOutcome::Contradicted: return "candidate contradicts midpoint identity";
  }
  return "?";
}

std::string_view to_string(AxiomFourStatus status) noexcept {
  switch (status) {
    case AxiomFourStatus::Pass: return "PASS";
    case AxiomFourStatus::Incomplete: return "INCOMPLETE";
    case AxiomFourStatus::Fail: return "FAIL";
  }
  return "?";
}

std::size_t AxiomFourReport::count(AxiomFourOutcome outcome) const {
  return static_cast<std::size_t>(std::count_if(
      pairs.begin(), pairs.end(), [&](const AxiomFourPair& p) { return p.outcome == outcome; }));
}

AxiomFourStatus AxiomFourReport::status() const {
  if (count(AxiomFourOutcome::Contradicted) > 0) return AxiomFourStatus::Fail;
  if (count(AxiomFourOutcome::NoCandidate) > 0) return AxiomFourStatus::Incomplete;
  return AxiomFourStatus::Pass;
}

AxiomFourReport check_axiom_four(const PTable& t, double eps,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = t.size();
  std::vector<std::pair<std::size_t, std::size_t>> todo = pairs;
  if (todo.empty()) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b) todo.emplace_back(a, b);
  }
  std::vector<std::pair<std::size_t, std::size_t>> orthogonal;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t c2 = 0; c2 < n; ++c2)
      if (c != c2 && t(c, c2) < eps) orthogonal.emplace_back(c, c2);

  AxiomFourReport out;
  out.report = {"axiom_four", eps, {}, {}};
  for (auto [a, b] : todo) {
    if (a >= n || b >= n) throw std::out_of_range("axiom four pair index out of range");
    const double pab = t(a, b);
    if (a == b || pab < eps || pab > 1.0 - eps) {
      ++out.skipped;
      continue;
    }
    AxiomFourPair rec;
    rec.a = a;
    rec.b = b;
    rec.lambda = 0.5 * (1.0 + std::sqrt(pab));
    bool any_candidate = false;
    double best = 0.0;
    for (auto [c, c2] : orthogonal) {
      if (std::abs(t(a, c) - rec.lambda) >= eps || std::abs(t(b, c) - rec.lambda) >= eps) continue;
      double res = 0.0;
      for (std::size_t z = 0; z < n; ++z) {
        const double lhs = 0.5 * (t(a, z) + t(b, z));
        const double rhs = rec.lambda * t(c, z) + (1.0 - rec.lambda) * t(c2, z);
        res = std::max(res, std::abs(lhs - rhs));
      }
      if (!any_candidate || res < best) {
        best = res;
        rec.witness = std::pair{c, c2};
      }
      any_candidate = true;
      if (res < eps) break;
    }
    if (!any_candidate) {
      rec.outcome = AxiomFourOutcome::NoCandidate;
      rec.witness.reset();
    } else {
      rec.residual = best;
      rec.outcome = best < eps ? AxiomFourOutcome::Witnessed : AxiomFourOutcome::Contradicted;
    }
    Witness w{{a, b}, rec.residual, rec.outcome != AxiomFourOutcome::Contradicted,
              std::string(to_string(rec.outcome))};
    if (rec.witness) {
      w.indices.push_back(rec.witness->first);
      w.indices.push_back(rec.witness->second);
    }
    out.report.add(std::move(w));
    out.pairs.push_back(rec);
  }
  out.report.note(std::to_string(out.pairs.size()) + " non-compatible ordered pairs, " +
                  std::to_string(out.count(AxiomFourOutcome::Witnessed)) + " witnessed, " +
                  std::to_string(out.count(AxiomFourOutcome::NoCandidate)) + " without candidate, " +
                  std::to_string(out.count(AxiomFourOutcome::Contradicted)) + " contradicted");
  return out;
}

MetricModel parse_metric_model(std::string_view text) {
  if (text == "crqm") return MetricModel::Crqm;
  if (text == "hv" || text == "hidden-variable") return MetricModel::HiddenVariable;
  throw std::invalid_argument("unknown model '" + std::string(text) +
                              "' (expected crqm or hv)");
}

std::string_view to_string(MetricModel model) noexcept {
  return model == MetricModel::Crqm ? "crqm" : "hv";
}

double metric_law(MetricModel model, double p) {
  p = std::clamp(p, 0.0, 1.0);
  return model == MetricModel::Crqm ? std::sqrt(1.0 - p) : 1.0 - p;
}

VerificationReport metric_consistency(const PTable& t, MetricModel model, double eps) {
  VerificationReport rep{"metric_consistency_" + std::string(to_string(model)), eps, {}, {}};
  Witness worst{{}, -1.0, true, "largest gap law - d_metric"};
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const double d = d_metric(t, i, j);
      const double law = metric_law(model, t(i, j));
      const double gap = law - d;
      if (d > law + eps) {
        rep.add({{i, j}, d - law, false, "d_metric exceeds the model law"});
      } else if (gap > worst.residual) {
        worst.indices = {i, j};
        worst.residual = gap;
      }
    }
  }
  if (rep.passed() && worst.residual >= 0.0) rep.add(worst);
  rep.note("finite-table d_metric is a lower bound on the law; witness shows the worst gap");
  return rep;
}

}  // namespace qfound
