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

// Acceptance run: one PASS/FAIL line per criterion. `--criterion N` runs a
// single one; the exit status is 0 iff every criterion run passed.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "qfound/dynamics.hpp"
#include "qfound/entropy.hpp"
#include "qfound/geometry.hpp"
#include "qfound/models.hpp"
#include "qfound/ptable.hpp"

using namespace qfound;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

constexpr std::array<int, 3> kRanks{1, 2, 4};

Outcome criterion_1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto r = entropy::info_entropy_qubit(entropy::EntropyTables::rings[k]);
    worst = std::max(worst, std::abs(r.value - entropy::ReferenceTables::information[k]));
    o.detail += std::string(to_string(entropy::EntropyTables::rings[k])) + "=" + fmt("%.6f", r.value) + " ";
  }
  const double t = seconds_since(t0);
  o.passed = worst < 1e-6 && t < 1.0;
  o.detail += "max_error=" + fmt("%.2e", worst) + " time=" + fmt("%.3fs", t);
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const auto t = entropy::compute_tables();
  double skel = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    skel = std::max(skel, std::abs(entropy::info_entropy_skeleton(kRanks[k]) -
                                   kRanks[k] / (kRanks[k] + 1.0) * std::numbers::ln2));
  }
  o.passed = skel < 1e-12;
  o.detail = "skeleton_error=" + fmt("%.2e", skel);
  for (std::size_t k = 0; k < 3; ++k) {
    const double reference = entropy::ReferenceTables::difference[k];
    const double gap = std::abs(t.difference[k] - reference);
    const bool ok = gap <= 0.0005;
    o.passed = o.passed && ok;
    o.detail += " " + std::string(to_string(entropy::EntropyTables::rings[k])) + ":" +
                fmt("%.6f", t.difference[k]) + "vs" + fmt("%.3f", reference) + (ok ? "" : "(off " + fmt("%.6f", gap) + ")");
  }
  return o;
}

Outcome criterion_3() {
  Outcome o;
  for (std::size_t k = 0; k < 3; ++k) {
    const Ring ring = entropy::EntropyTables::rings[k];
    const auto t0 = std::chrono::steady_clock::now();
    const auto mc = entropy::info_entropy_mc(ring, 1'000'000, 20 + k);
    const double t = seconds_since(t0);
    const double q = entropy::info_entropy_qubit(ring).value;
    const double z = std::abs(mc.value - q) / mc.error;
    const bool ok = z < 3.0 && t < 30.0;
    o.passed = o.passed && ok;
    o.detail += std::string(to_string(ring)) + ":z=" + fmt("%.2f", z) + ",t=" + fmt("%.2fs", t) + " ";
  }
  return o;
}

Outcome criterion_4() {
  Outcome o;
  int good = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    bool ok = true;
    for (Ring ring : entropy::EntropyTables::rings) {
      const auto r = entropy::axiom_five_test(ring, 100'000, seed);
      ok = ok && r.uniform.passed == (ring == Ring::C) && r.density.passed;
    }
    if (ok) ++good;
  }
  o.passed = good == 5;
  o.detail = std::to_string(good) + "/5 seeds discriminate";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  for (int rank : kRanks) {
    const auto t = models::skeleton_table(rank);
    const auto four = check_axiom_four(t);
    const bool ok = check_axiom_one(t).passed() && check_axiom_three(t).passed() &&
                    !four.pairs.empty() &&
                    four.count(AxiomFourOutcome::NoCandidate) == four.pairs.size();
    o.passed = o.passed && ok;
    o.detail += "R=" + std::to_string(rank) + ":" + std::to_string(four.pairs.size()) +
                "pairs/no_candidate ";
  }
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const auto t = models::hv_skeleton_simulate(1, 1'000'000, 1);
  double sim = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      sim = std::max(sim, std::abs(t(i, j) - models::skeleton_table(1)(i, j)));
  double exact = 0.0;
  for (int rank : kRanks) {
    const auto s = models::skeleton_table(rank);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        exact = std::max(exact, std::abs(models::hv_exact_overlap(rank, i, j) - s(i, j)));
  }
  o.passed = sim < 0.002 && exact == 0.0;
  o.detail = "simulated_max_error=" + fmt("%.5f", sim) + " exact_error=" + fmt("%.1e", exact);
  return o;
}

Outcome criterion_7() {
  Outcome o;
  auto rng = make_engine(7);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Ring ring = entropy::EntropyTables::rings[static_cast<std::size_t>(t % 3)];
    const auto x = sample_uniform_state(ring, 2 + t % 3, rng);
    const auto y = sample_uniform_state(ring, 2 + t % 3, rng);
    const auto d = dynamics::projector_distance(x, y);
    worst = std::max(worst, std::abs(d.top_eigenvalue - dynamics::crqm_distance(x, y)));
  }
  double hv = 0.0;
  for (int rank : kRanks) {
    const auto s = models::skeleton_table(rank);
    std::vector<std::vector<double>> rows(s.size(), std::vector<double>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j) rows[i][j] = models::hv_exact_overlap(rank, i, j);
    const PTable h(s.labels(), rows);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j)
        hv = std::max(hv, std::abs(d_metric(h, i, j) - (1.0 - h(i, j))));
  }
  o.passed = worst < 1e-12 && hv == 0.0;
  o.detail = "crqm_eigen_residual=" + fmt("%.2e", worst) + " hv_metric_residual=" + fmt("%.1e", hv);
  return o;
}

Outcome criterion_8() {
  Outcome o;
  int strict = 0;
  int total = 0;
  auto rng = make_engine(8);
  for (Ring ring : entropy::EntropyTables::rings) {
    for (int t = 0; t < 1000; ++t) {
      const auto a = sample_uniform_state(ring, 2, rng);
      const auto b = sample_uniform_state(ring, 2, rng);
      const auto r = dynamics::tvn_compare(a, b);
      ++total;
      if (r.h_intermediate < r.h_direct) ++strict;
    }
  }
  const auto r = dynamics::tvn_compare(StateVector::basis(Ring::C, 2, 0),
                                       StateVector::complex({std::sqrt(0.75), {0.0, 0.5}}));
  const bool values = std::abs(r.h_direct - 0.562335) < 1e-6 && std::abs(r.h_intermediate - 0.376770) < 1e-6;
  o.passed = strict == total && values;
  o.detail = std::to_string(strict) + "/" + std::to_string(total) + " strict; " +
             fmt("%.6f", r.h_direct) + " -> " + fmt("%.6f", r.h_intermediate);
  return o;
}

Outcome criterion_9() {
  Outcome o;
  int held = 0;
  int runs = 0;
  double asym = 0.0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto rng = make_engine(seed);
    const std::size_t n = 2 + seed % 5;
    const auto h = dynamics::random_hermitian(n, rng);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    psi(0) = 1.0;
    const double delta = dynamics::dispersion(h, psi);
    for (double td : {0.1, 0.03, 0.01}) {
      const auto run = dynamics::zeno_chain(h, psi, td / delta, 1000);
      ++runs;
      if (run.in_regime && run.report.passed()) ++held;
      if (td == 0.01) asym = std::max(asym, std::abs(run.survival.back() / run.asymptote - 1.0));
    }
  }
  o.passed = held == runs && asym < 0.01;
  o.detail = std::to_string(held) + "/" + std::to_string(runs) + " chains bounded; asymptote_rel_error=" +
             fmt("%.2e", asym);
  return o;
}

Outcome criterion_10() {
  Outcome o;
  auto rng = make_engine(10);
  double mid = 0.0;
  double stereo = 0.0;
  double normal = 0.0;
  double unitary = 0.0;
  std::uniform_real_distribution<double> th(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> ph(0.0, 2 * std::numbers::pi);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t dim = 3 + t % 3;
    const geometry::SpherePoint a(sample_unit_sphere(dim, rng));
    const geometry::SpherePoint b(sample_unit_sphere(dim, rng));
    const geometry::SpherePoint z(sample_unit_sphere(dim, rng));
    mid = std::max(mid, geometry::spherical_midpoint_check(a, b, z));
    stereo = std::max(stereo, geometry::born_vs_arc_check({th(rng), ph(rng)}, {th(rng), ph(rng)}));
    normal = std::max(normal, geometry::normal_factorization_check(
                                  {g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}));
    unitary = std::max(unitary, geometry::basis_unitarity_check(2 + t % 5, 1000 + t));
  }
  const bool identities = mid < 1e-12 && stereo < 1e-12 && normal < 1e-12 && unitary < 1e-12;

  const auto m = geometry::build_circle_by_adjunction(std::numbers::pi / 2, 8);
  const auto frames = enumerate_frames(m.table, kDefaultTolerance, 1100);
  const auto four = check_axiom_four(m.table);
  const bool mapping = geometry::check_proper_mapping(m).passed() && check_axiom_two(m.table).passed() &&
                       check_axiom_three(m.table, frames).passed() &&
                       four.status() != AxiomFourStatus::Fail &&
                       metric_consistency(m.table, MetricModel::Crqm).passed();
  o.passed = identities && mapping;
  o.detail = "midpoint=" + fmt("%.1e", mid) + " stereo=" + fmt("%.1e", stereo) + " normal=" +
             fmt("%.1e", normal) + " unitary=" + fmt("%.1e", unitary) + " circle(" +
             std::to_string(m.table.size()) + " points) axiom_four=" + std::string(to_string(four.status())) +
             " contradicted=" + std::to_string(four.count(AxiomFourOutcome::Contradicted));
  return o;
}

const std::vector<std::function<Outcome()>> kCriteria{
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const int n = std::atoi(argv[++i]);
      if (n < 1 || n > static_cast<int>(kCriteria.size())) {
        std::cerr << "criterion must be 1.." << kCriteria.size() << '\n';
        return 2;
      }
      selected.push_back(n);
    } else {
      std::cerr << "usage: qfound_acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (selected.empty())
    for (int n = 1; n <= static_cast<int>(kCriteria.size()); ++n) selected.push_back(n);

  bool all = true;
  for (int n : selected) {
    Outcome o;
    try {
      o = kCriteria[static_cast<std::size_t>(n - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.passed;
    std::cout << "criterion " << n << ' ' << (o.passed ? "PASS" : "FAIL") << ' ' << o.detail << '\n';
  }
  return all ? 0 : 1;
}
