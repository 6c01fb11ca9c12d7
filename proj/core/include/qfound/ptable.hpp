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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfound/algebra.hpp"
#include "qfound/report.hpp"

namespace qfound {

/// A finite table of pass probabilities p(i, j): the probability that a beam
/// prepared by filter i passes filter j.
///
/// Construction only enforces shape, finiteness, range [0, 1] and unique
/// labels; the axiom checks below diagnose everything else.
class PTable {
 public:
  PTable() = default;
  /// Throws std::invalid_argument on non-square input, label count mismatch,
  /// duplicate labels, non-finite values or values outside [0, 1] by more
  /// than 1e-12 (values within that slack are clamped).
  PTable(std::vector<std::string> labels, const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return labels_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return p_[i * size() + j]; }
  double at(std::size_t i, std::size_t j) const;
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;
  std::vector<std::vector<double>> rows() const;

  /// Largest |p(i,j) - p(j,i)|.
  double max_asymmetry() const;

  /// Returns a copy with p replaced by (p + p^T) / 2.
  PTable symmetrized() const;

 private:
  std::vector<std::string> labels_;
  std::vector<double> p_;
};

/// Thrown when exhaustive frame enumeration is asked to handle a table larger
/// than its element cap.
class TableTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A maximal set of mutually orthogonal elements, as sorted table indices.
struct Frame {
  std::vector<std::size_t> indices;

  std::size_t size() const noexcept { return indices.size(); }
  bool contains(std::size_t i) const;
  friend bool operator==(const Frame&, const Frame&) = default;
  friend auto operator<=>(const Frame&, const Frame&) = default;
};

inline constexpr std::size_t kFrameElementCap = 64;

/// Diagonal equal to one, symmetry, and no off-diagonal entry within eps of
/// one.
VerificationReport check_axiom_one(const PTable& t, double eps = kDefaultTolerance);

/// Compactness in the d-metric. Always passes for a finite table; the report
/// says so.
VerificationReport check_axiom_two(const PTable& t);

/// max over table columns z of |p(i,z) - p(j,z)|. For a finite sample of a
/// continuum this is a lower bound on the continuum distance.
double d_metric(const PTable& t, std::size_t i, std::size_t j);

/// All maximal cliques of the graph on `n` vertices with the given adjacency
/// matrix, each sorted, in lexicographic order. Bron-Kerbosch with pivoting.
std::vector<std::vector<std::size_t>> maximal_cliques(
    const std::vector<std::vector<bool>>& adjacency);

/// Size of the largest clique (0 for an empty graph).
std::size_t maximum_clique_size(const std::vector<std::vector<bool>>& adjacency);

/// Every frame of the table: maximal cliques of the graph with edges
/// p(i,j) < eps. Exhaustive; throws TableTooLarge above `max_elements`.
std::vector<Frame> enumerate_frames(const PTable& t, double eps = kDefaultTolerance,
                                    std::size_t max_elements = kFrameElementCap);

/// The frames of largest size. A finite sample of a continuum holds maximal
/// orthogonal sets that are fragments of frames of the underlying space (a
/// lone sampled state, say); all genuine frames of one space share a size.
std::vector<Frame> largest_frames(const std::vector<Frame>& frames);

/// Frames maximal within the given subset of elements.
std::vector<Frame> enumerate_frames_in(const PTable& t, const std::vector<std::size_t>& subset,
                                       double eps = kDefaultTolerance,
                                       std::size_t max_elements = kFrameElementCap);

/// Elements z spanned by a set of orthogonal elements: |sum_{j in F} p(z,j) - 1| < eps.
std::vector<std::size_t> subspace_of(const PTable& t, const Frame& f,
                                     double eps = kDefaultTolerance);

/// Every row sums to one over every frame.
VerificationReport check_axiom_three(const PTable& t, const std::vector<Frame>& frames,
                                     double eps = kDefaultTolerance);
VerificationReport check_axiom_three(const PTable& t, double eps = kDefaultTolerance,
                                     std::size_t max_elements = kFrameElementCap);

/// Two frames of one subspace: equal size and equal row sums for every table
/// element. Throws std::invalid_argument if F2 is not a frame of F1's
/// subspace.
VerificationReport check_frame_equivalence(const PTable& t, const Frame& f1, const Frame& f2,
                                           double eps = kDefaultTolerance);

enum class AxiomFourOutcome {
  Witnessed,     ///< an orthogonal pair satisfies the midpoint identity
  NoCandidate,   ///< no orthogonal pair in the table has the required lambda
  Contradicted,  ///< a candidate has the right lambda but breaks the identity
};

std::string_view to_string(AxiomFourOutcome outcome) noexcept;

struct AxiomFourPair {
  std::size_t a = 0;
  std::size_t b = 0;
  double lambda = 0.0;
  AxiomFourOutcome outcome = AxiomFourOutcome::NoCandidate;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  ///< (c, c')
  double residual = 0.0;  ///< best midpoint-identity residual among candidates
};

enum class AxiomFourStatus { Pass, Incomplete, Fail };

std::string_view to_string(AxiomFourStatus status) noexcept;

struct AxiomFourReport {
  std::vector<AxiomFourPair> pairs;  ///< non-compatible ordered pairs checked
  std::size_t skipped = 0;           ///< compatible pairs (orthogonal or identical)
  VerificationReport report;         ///< violations are contradicted pairs only

  std::size_t count(AxiomFourOutcome outcome) const;
  /// Pass: every pair witnessed. Incomplete: some pairs lack a candidate but
  /// none is contradicted. Fail: some pair contradicted.
  AxiomFourStatus status() const;
};

/// Searches the table for the orthogonal pair (c, c') demanded for each
/// non-compatible ordered pair (a, b), with lambda = (1 + sqrt(p(a,b))) / 2.
/// If `pairs` is non-empty only those ordered pairs are examined.
AxiomFourReport check_axiom_four(const PTable& t, double eps = kDefaultTolerance,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs = {});

enum class MetricModel { Crqm, HiddenVariable };

/// Accepts "crqm" and "hv" / "hidden-variable".
MetricModel parse_metric_model(std::string_view text);
std::string_view to_string(MetricModel model) noexcept;

/// Analytic distance law of a model: sqrt(1-p) for crqm, 1-p for hidden
/// variables.
double metric_law(MetricModel model, double p);

/// Compares d_metric against the model's law for every pair: requires
/// d_metric <= law + eps (lower-bound semantics on finite tables). Each
/// witness carries the gap law - d_metric.
VerificationReport metric_consistency(const PTable& t, MetricModel model,
                                      double eps = kDefaultTolerance);

}  // namespace qfound
