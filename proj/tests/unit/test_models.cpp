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

#include <cmath>

#include <catch_amalgamated.hpp>

#include "qfound/models.hpp"
#include "qfound/ptable.hpp"

using namespace qfound;
using Catch::Approx;

namespace {

double max_error(const PTable& t, int rank) {
  double m = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      m = std::max(m, std::abs(t(i, j) - models::hv_exact_overlap(rank, i, j)));
  return m;
}

// Skeleton of rank R as Born states: e1 and (e1 + u e2)/sqrt 2 for the
// imaginary units u of the ring, plus antipodes.
std::vector<StateVector> skeleton_states(Ring ring) {
  const double s = 1.0 / std::sqrt(2.0);
  const Quaternion units[] = {1.0, Quaternion::i(), Quaternion::j(), Quaternion::k()};
  std::vector<StateVector> vs;
  vs.push_back(StateVector(ring, {1.0, 0.0}));
  vs.push_back(StateVector(ring, {0.0, 1.0}));
  for (int k = 0; k < real_dimension(ring); ++k) {
    vs.push_back(StateVector(ring, {s, s * units[k]}));
    vs.push_back(StateVector(ring, {s, -s * units[k]}));
  }
  return vs;
}

}  // namespace

TEST_CASE("real skeleton is the four-element table") {
  const auto t = models::skeleton_table(1);
  REQUIRE(t.size() == 4);
  const std::vector<std::vector<double>> expected{
      {1, 0, 0.5, 0.5}, {0, 1, 0.5, 0.5}, {0.5, 0.5, 1, 0}, {0.5, 0.5, 0, 1}};
  CHECK(t.rows() == expected);
  CHECK(t.label(0) == "x1");
  CHECK(t.label(1) == "x1'");
  CHECK_THROWS_AS(models::skeleton_table(0), std::invalid_argument);
}

TEST_CASE("skeletons coincide with Born tables of the axis states") {
  for (Ring ring : {Ring::R, Ring::C, Ring::H}) {
    const auto t = models::skeleton_table(rank_of(ring));
    const auto born = models::born_table(skeleton_states(ring));
    REQUIRE(t.size() == born.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) CHECK(std::abs(t(i, j) - born(i, j)) < 1e-12);
  }
}

TEST_CASE("skeletons satisfy axioms one and three but not four") {
  for (int rank = 1; rank <= 6; ++rank) {
    const auto t = models::skeleton_table(rank);
    CHECK(t.size() == static_cast<std::size_t>(2 * (rank + 1)));
    CHECK(check_axiom_one(t).passed());
    CHECK(check_axiom_three(t).passed());
    const auto frames = enumerate_frames(t);
    CHECK(frames.size() == static_cast<std::size_t>(rank + 1));
    for (const auto& f : frames)
      for (std::size_t a = 0; a < t.size(); ++a)
        CHECK(t(a, f.indices[0]) + t(a, f.indices[1]) == 1.0);
    const auto four = check_axiom_four(t);
    CHECK(four.count(AxiomFourOutcome::Witnessed) == 0);
    CHECK(four.count(AxiomFourOutcome::NoCandidate) == four.pairs.size());
  }
}

TEST_CASE("crqm tables") {
  const auto id = models::crqm_table(Ring::C, 2, 0, 1);
  CHECK(id.table.rows() == std::vector<std::vector<double>>{{1, 0}, {0, 1}});
  CHECK(id.table.label(0) == "e1");

  // Real states at angles pi/4 and pi/2 against the basis.
  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<StateVector> vs{StateVector::real({1, 0}), StateVector::real({0, 1}),
                                    StateVector::real({s, s}), StateVector::real({0, 1})};
  const auto t = models::born_table(vs, {"e1", "e2", "a", "b"});
  CHECK(t(0, 2) == Approx(std::pow(std::cos(std::numbers::pi / 4), 2)));
  CHECK(t(2, 3) == Approx(std::pow(std::cos(std::numbers::pi / 4), 2)));
  CHECK(t(0, 3) == Approx(0.0).margin(1e-15));

  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Ring ring = seed % 3 == 0 ? Ring::R : (seed % 3 == 1 ? Ring::C : Ring::H);
    const auto m = models::crqm_table(ring, 2 + seed % 3, 6, seed);
    REQUIRE(m.vectors.size() == m.table.size());
    REQUIRE(check_axiom_one(m.table).passed());
    REQUIRE(check_axiom_three(m.table, largest_frames(enumerate_frames(m.table))).passed());
  }
}

TEST_CASE("crqm tables are invariant under right re-phasing") {
  auto rng = make_engine(61);
  std::normal_distribution<double> n(0.0, 1.0);
  const auto m = models::crqm_table(Ring::H, 3, 10, 61);
  std::vector<StateVector> rephased;
  for (const auto& v : m.vectors) rephased.push_back(v.scaled_right({n(rng), n(rng), n(rng), n(rng)}));
  const auto t = models::born_table(rephased);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) CHECK(std::abs(t(i, j) - m.table(i, j)) < 1e-12);
}

TEST_CASE("crqm tables satisfy the crqm distance law") {
  const auto m = models::crqm_table(Ring::C, 2, 40, 3);
  CHECK(metric_consistency(m.table, MetricModel::Crqm).passed());
}

TEST_CASE("hidden-variable filter rule") {
  const double xi[] = {0.0, -0.3, 0.5};
  CHECK(models::hv_passes({0, true}, xi));  // zero counts as positive
  CHECK_FALSE(models::hv_passes({0, false}, xi));
  CHECK(models::hv_passes({1, false}, xi));
  CHECK(models::hv_passes({2, true}, xi));
}

TEST_CASE("exact overlaps") {
  CHECK(models::hv_exact_overlap(1, 0, 1) == 0.0);
  CHECK(models::hv_exact_overlap(1, 0, 2) == 0.5);
  CHECK(models::hv_exact_overlap(1, 0, 0) == 1.0);
  for (int rank : {1, 2, 4}) {
    const auto t = models::skeleton_table(rank);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        CHECK(models::hv_exact_overlap(rank, i, j) == t(i, j));
  }
}

TEST_CASE("hidden-variable simulation reproduces the skeleton") {
  const auto t = models::hv_skeleton_simulate(1, 1'000'000, 1);
  CHECK(max_error(t, 1) < 0.002);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t(i, i) == 1.0);
  CHECK(t(0, 1) == 0.0);
  CHECK(t(2, 3) == 0.0);

  const auto t4 = models::hv_skeleton_simulate(4, 1'000'000, 2);
  for (std::size_t i = 0; i < t4.size(); ++i)
    for (std::size_t j = 0; j < t4.size(); ++j)
      if (i / 2 != j / 2) CHECK(std::abs(t4(i, j) - 0.5) < 0.002);
  CHECK(metric_consistency(t4.symmetrized(), MetricModel::HiddenVariable, 0.004).passed());
}

TEST_CASE("hidden-variable simulation: determinism and sub-streams") {
  const auto a = models::hv_skeleton_simulate(2, 20'000, 9);
  const auto b = models::hv_skeleton_simulate(2, 20'000, 9);
  CHECK(a.rows() == b.rows());
  const auto c = models::hv_skeleton_simulate(2, 20'000, 9, 4);
  const auto d = models::hv_skeleton_simulate(2, 20'000, 9, 4);
  CHECK(c.rows() == d.rows());
  CHECK(max_error(c, 2) < 0.03);
  CHECK_THROWS_AS(models::hv_skeleton_simulate(2, 0, 9), std::invalid_argument);
}

TEST_CASE("hidden-variable entries: per-entry spread") {
  // Each off-frame estimate is a conditional frequency over ~n/2 samples, so
  // its standard deviation is 0.71/sqrt(n); 1.5/sqrt(n) is a 2.1 sigma band
  // (96.6% coverage) and 3.6/sqrt(n) is 5 sigma.
  const std::size_t n = 100'000;
  const double root = std::sqrt(static_cast<double>(n));
  for (int rank : {1, 2, 4}) {
    std::size_t total = 0;
    std::size_t inside = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto t = models::hv_skeleton_simulate(rank, n, seed);
      for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) {
          if (i / 2 == j / 2) continue;
          ++total;
          worst = std::max(worst, std::abs(t(i, j) - 0.5));
          if (std::abs(t(i, j) - 0.5) < 1.5 / root) ++inside;
        }
    }
    INFO("rank " << rank << ": " << inside << " of " << total << " inside the 2.1 sigma band");
    CHECK(static_cast<double>(inside) >= 0.9 * static_cast<double>(total));
    CHECK(worst < 3.6 / root);
  }
}

TEST_CASE("hidden-variable convergence: max-entry error within 1.5/sqrt(n) for 19 of 20 seeds",
          "[hv-max-entry]") {
  const std::size_t n = 100'000;
  const double band = 1.5 / std::sqrt(static_cast<double>(n));
  for (int rank : {1, 2, 4}) {
    int ok = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      if (max_error(models::hv_skeleton_simulate(rank, n, seed), rank) < band) ++ok;
    }
    INFO("rank " << rank << ": " << ok << " of 20 seeds inside the band");
    CHECK(ok >= 19);
  }
}
