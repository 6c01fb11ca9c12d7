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

#include "qfound/mixed_state.hpp"

#include <cmath>
#include <numeric>

namespace qfound {

void require_orthogonal(std::span<const StateVector> frame) {
  if (frame.empty()) throw IncompleteFrame("frame is empty");
  for (std::size_t i = 0; i < frame.size(); ++i) {
    for (std::size_t j = i + 1; j < frame.size(); ++j) {
      if (frame[i].ring() != frame[j].ring() || frame[i].dim() != frame[j].dim()) {
        throw IncompleteFrame("frame elements differ in ring or dimension");
      }
      const double p = born_probability(frame[i], frame[j]);
      if (p >= kFrameTolerance) {
        throw IncompleteFrame("frame elements " + std::to_string(i) + " and " + std::to_string(j) +
                              " are not orthogonal (p = " + std::to_string(p) + ")");
      }
    }
  }
}

MixedState::MixedState(std::vector<StateVector> frame, std::vector<double> weights)
    : frame_(std::move(frame)), weights_(std::move(weights)) {
  if (frame_.size() != weights_.size()) {
    throw std::invalid_argument("mixed state needs one weight per frame element");
  }
  require_orthogonal(frame_);
  for (double w : weights_) {
    if (!(w >= -1e-12)) throw std::invalid_argument("mixed state weights must be non-negative");
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) >= kFrameTolerance) {
    throw std::invalid_argument("mixed state weights sum to " + std::to_string(total));
  }
}

MixedState MixedState::maximally_mixed(std::vector<StateVector> frame) {
  const std::size_t n = frame.size();
  if (n == 0) throw IncompleteFrame("frame is empty");
  return {std::move(frame), std::vector<double>(n, 1.0 / static_cast<double>(n))};
}

double MixedState::evaluate(const StateVector& z) const {
  double s = 0.0;
  for (std::size_t i = 0; i < frame_.size(); ++i) s += weights_[i] * born_probability(frame_[i], z);
  return s;
}

}  // namespace qfound
