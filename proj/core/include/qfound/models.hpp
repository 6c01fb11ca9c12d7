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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qfound/algebra.hpp"
#include "qfound/ptable.hpp"

/// Generators for concrete p-tables: skeletons, Born-rule tables and the
/// hidden-variable model that reproduces the skeletons.
namespace qfound::models {

/// Element of the skeleton family: filter on coordinate `axis` (0-based)
/// passing the positive (x_j) or negative (x_j') half.
struct SkeletonElement {
  int axis = 0;
  bool positive = true;
};

/// Index layout of skeleton tables: x1, x1', x2, x2', ...
SkeletonElement skeleton_element(std::size_t index);
std::string skeleton_label(std::size_t index);

/// 2(R+1) elements with p(x_j, x_j') = 0 and 1/2 between different axes.
/// Throws std::invalid_argument for rank < 1.
PTable skeleton_table(int rank);

/// Table of Born probabilities between the given vectors.
PTable born_table(std::span<const StateVector> vectors, std::vector<std::string> labels = {});

struct CrqmTable {
  PTable table;
  std::vector<StateVector> vectors;
};

/// Standard basis e1..eN followed by `count` uniformly sampled states.
CrqmTable crqm_table(Ring ring, std::size_t dim, std::size_t count, std::uint64_t seed);

/// HiddenVariableModel: xi uniform on the unit R-sphere; element (j, sign)
/// passes iff sign(xi_j) matches, with xi_j = 0 counted as positive.
bool hv_passes(const SkeletonElement& e, std::span<const double> xi);

/// Monte-Carlo estimate of p(a, b) = mu(pass a and pass b) / mu(pass b) on
/// the skeleton element set. `workers` > 1 splits the samples over
/// independent sub-streams; workers == 1 is the reference stream.
PTable hv_skeleton_simulate(int rank, std::size_t samples, std::uint64_t seed,
                            std::size_t workers = 1);

/// Exact conditional overlap of two coordinate half-spheres: 1 for the same
/// element, 0 for antipodal filters, 1/2 for different axes.
double hv_exact_overlap(int rank, std::size_t i, std::size_t j);

}  // namespace qfound::models
