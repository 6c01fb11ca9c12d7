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

#include "qfound/models.hpp"

#include <stdexcept>
#include <thread>

namespace qfound::models {

namespace {

void require_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
}

std::size_t skeleton_size(int rank) { return 2 * (static_cast<std::size_t>(rank) + 1); }

}  // namespace

SkeletonElement skeleton_element(std::size_t index) {
  return {static_cast<int>(index / 2), index % 2 == 0};
}

std::string skeleton_label(std::size_t index) {
  const auto e = skeleton_element(index);
  return "x" + std::to_string(e.axis + 1) + (e.positive ? "" : "'");
}

double hv_exact_overlap(int rank, std::size_t i, std::size_t j) {
  require_rank(rank);
  if (i >= skeleton_size(rank) || j >= skeleton_size(rank)) {
    throw std::out_of_range("skeleton element index out of range");
  }
  const auto a = skeleton_element(i);
  const auto b = skeleton_element(j);
  if (a.axis != b.axis) return 0.5;
  return a.positive == b.positive ? 1.0 : 0.0;
}

PTable skeleton_table(int rank) {
  require_rank(rank);
  const std::size_t n = skeleton_size(rank);
  std::vector<std::string> labels(n);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = skeleton_label(i);
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = hv_exact_overlap(rank, i, j);
  }
  return {std::move(labels), rows};
}

PTable born_table(std::span<const StateVector> vectors, std::vector<std::string> labels) {
  const std::size_t n = vectors.size();
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
  }
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      rows[i][j] = rows[j][i] = born_probability(vectors[i], vectors[j]);
    }
  }
  return {std::move(labels), rows};
}

CrqmTable crqm_table(Ring ring, std::size_t dim, std::size_t count, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
  std::vector<StateVector> vectors;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim; ++k) {
    vectors.push_back(StateVector::basis(ring, dim, k));
    labels.push_back("e" + std::to_string(k + 1));
  }
  auto rng = make_engine(seed);
  for (std::size_t k = 0; k < count; ++k) {
    vectors.push_back(sample_uniform_state(ring, dim, rng));
    labels.push_back("s" + std::to_string(k + 1));
  }
  auto table = born_table(vectors, std::move(labels));
  return {std::move(table), std::move(vectors)};
}

bool hv_passes(const SkeletonElement& e, std::span<const double> xi) {
  const double c = xi[static_cast<std::size_t>(e.axis)];
  return e.positive ? c >= 0.0 : c < 0.0;
}

namespace {

struct Counts {
  std::vector<std::uint64_t> joint;  // n x n: pass i and pass j
  std::vector<std::uint64_t> single;

  explicit Counts(std::size_t n) : joint(n * n, 0), single(n, 0) {}
};

void simulate_stream(int rank, std::size_t samples, std::uint64_t seed, std::uint64_t worker,
                     Counts& counts) {
  const std::size_t n = skeleton_size(rank);
  auto rng = make_engine(seed, worker);
  std::vector<bool> pass(n);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto xi = sample_unit_sphere(static_cast<std::size_t>(rank) + 1, rng);
    for (std::size_t i = 0; i < n; ++i) pass[i] = hv_passes(skeleton_element(i), xi);
    for (std::size_t i = 0; i < n; ++i) {
      if (!pass[i]) continue;
      ++counts.single[i];
      for (std::size_t j = 0; j < n; ++j)
        if (pass[j]) ++counts.joint[i * n + j];
    }
  }
}

}  // namespace

PTable hv_skeleton_simulate(int rank, std::size_t samples, std::uint64_t seed,
                            std::size_t workers) {
  require_rank(rank);
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  if (workers == 0) workers = 1;
  const std::size_t n = skeleton_size(rank);

  std::vector<Counts> partial(workers, Counts(n));
  if (workers == 1) {
    simulate_stream(rank, samples, seed, 0, partial[0]);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t share = samples / workers + (w < samples % workers ? 1 : 0);
      threads.emplace_back(simulate_stream, rank, share, seed, w, std::ref(partial[w]));
    }
    for (auto& th : threads) th.join();
  }
  Counts total(n);
  for (const auto& c : partial) {
    for (std::size_t k = 0; k < total.joint.size(); ++k) total.joint[k] += c.joint[k];
    for (std::size_t k = 0; k < n; ++k) total.single[k] += c.single[k];
  }

  std::vector<std::string> labels(n);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = skeleton_label(i);
    for (std::size_t j = 0; j < n; ++j) {
      // Conditioning on passing j; an empty conditioning set leaves 0.
      if (total.single[j] > 0) {
        rows[i][j] = static_cast<double>(total.joint[i * n + j]) /
                     static_cast<double>(total.single[j]);
      }
    }
  }
  return {std::move(labels), rows};
}

}  // namespace qfound::models
