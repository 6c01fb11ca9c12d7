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

#include <span>
#include <stdexcept>
#include <vector>

#include "qfound/algebra.hpp"

namespace qfound {

/// Thrown when a frame is not orthonormal or does not span the state being
/// measured.
class IncompleteFrame : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kFrameTolerance = 1e-9;

/// Throws IncompleteFrame unless the vectors are pairwise orthogonal
/// (born_probability < kFrameTolerance) and share ring and dimension.
void require_orthogonal(std::span<const StateVector> frame);

/// Convex combination of mutually orthogonal pure states.
class MixedState {
 public:
  /// Throws IncompleteFrame on a non-orthogonal frame; std::invalid_argument
  /// on size mismatch, negative weights or weights not summing to one.
  MixedState(std::vector<StateVector> frame, std::vector<double> weights);

  /// Equal mixture of the frame elements.
  static MixedState maximally_mixed(std::vector<StateVector> frame);

  const std::vector<StateVector>& frame() const noexcept { return frame_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// The frame function rho(z) = sum_i w_i f_i(z).
  double evaluate(const StateVector& z) const;

 private:
  std::vector<StateVector> frame_;
  std::vector<double> weights_;
};

}  // namespace qfound
