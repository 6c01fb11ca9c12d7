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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "qfound/algebra.hpp"
#include "qfound/mixed_state.hpp"
#include "qfound/report.hpp"

/// Shannon, von Neumann and information entropy (all in nats).
namespace qfound::entropy {

/// -sum q ln q with 0 ln 0 = 0. Throws std::invalid_argument if any q < 0 or
/// the sum differs from one by more than 1e-12.
double shannon(std::span<const double> q);

/// Shannon entropy of (p, 1 - p).
double binary_shannon(double p);

/// Outcome entropy of a qubit mixture with purity delta:
/// binary_shannon((1 + delta) / 2).
double purity_shannon(double delta);

/// Shannon entropy of the weights of a mixed state.
double von_neumann(const MixedState& m);

enum class Method { ExactFrames, Quadrature, MonteCarlo };

std::string_view to_string(Method m) noexcept;

struct EntropyResult {
  double value = 0.0;
  Method method = Method::Quadrature;
  double error = 0.0;  ///< standard error for Monte-Carlo, 0 otherwise
};

struct QuadratureSpec {
  std::size_t nodes = 64;
};

struct MonteCarloSpec {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
};

using AverageMethod = std::variant<QuadratureSpec, MonteCarloSpec>;

/// Average of g over the purity distribution of a rank-R qubit,
///   int_0^1 g(d) (1 - d^2)^((R-2)/2) dd / int_0^1 (1 - d^2)^((R-2)/2) dd.
/// Quadrature integrates over u with d = sin u, which removes the endpoint
/// singularity at R = 1. Monte-Carlo draws d = |xi_1| for xi uniform on the
/// R-sphere. Throws std::invalid_argument for R < 1 and std::domain_error if
/// g is not finite on the sample points.
EntropyResult purity_average(int rank, const std::function<double(double)>& g,
                             const AverageMethod& method = QuadratureSpec{});

/// Average outcome entropy of a pure qubit over all measurement frames.
EntropyResult info_entropy_qubit(Ring ring, const AverageMethod& method = QuadratureSpec{});

/// Same average by direct simulation: random frames {y, y'} with y uniform
/// in ring^2, p = born_probability(e1, y).
EntropyResult info_entropy_mc(Ring ring, std::size_t samples, std::uint64_t seed,
                              std::size_t workers = 1);

/// Average outcome entropy of a pure skeleton element over the frames of
/// skeleton_table(rank), computed from the table.
double info_entropy_skeleton(int rank);

/// Purities |2p - 1| of a pure qubit measured in random frames.
std::vector<double> sample_purities(Ring ring, std::size_t samples, std::uint64_t seed);

/// KS acceptance threshold for sqrt(n) * D (alpha ~ 0.01).
inline constexpr double kKsThreshold = 1.63;

struct KsOutcome {
  double statistic = 0.0;  ///< D
  double scaled = 0.0;     ///< sqrt(n) * D
  bool passed = false;
};

struct AxiomFiveResult {
  KsOutcome uniform;
  KsOutcome density;
  double exponent = 0.0;  ///< (R - 2) / 2 of the density test
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  VerificationReport report;  ///< passes iff the purities look uniform
};

/// Density exponent (R - 2) / 2 of the purity law of a ring.
double purity_exponent(Ring ring);

/// Throws std::invalid_argument for samples < 1000.
AxiomFiveResult axiom_five_test(Ring ring, std::size_t samples, std::uint64_t seed);

/// Both N = 2 entropy tables, recomputed.
struct EntropyTables {
  static constexpr std::array<Ring, 3> rings{Ring::R, Ring::C, Ring::H};
  std::array<double, 3> von_neumann{};
  std::array<EntropyResult, 3> information{};  ///< quadrature
  std::array<double, 3> skeleton{};            ///< exact over frames
  std::array<double, 3> difference{};          ///< information - skeleton
};

EntropyTables compute_tables(std::size_t quadrature_nodes = 64);

/// Reference values, for residual reporting.
struct ReferenceTables {
  static constexpr std::array<double, 3> information{
      0.38629436111989061, 0.5, 7.0 / 12.0};  // 2 ln 2 - 1, 1/2, 7/12
  static constexpr std::array<double, 3> skeleton{
      0.34657359027997264, 0.46209812037329684, 0.55451774444795623};  // (R/(R+1)) ln 2
  static constexpr std::array<double, 3> difference{0.040, 0.037, 0.029};
};

}  // namespace qfound::entropy
