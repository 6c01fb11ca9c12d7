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
#include <vector>

#include <Eigen/Dense>

#include "qfound/algebra.hpp"
#include "qfound/mixed_state.hpp"
#include "qfound/report.hpp"

/// Measurement collapse, the entropy reduction by an intermediate
/// measurement, the Hilbert-space distance law and Zeno chains.
namespace qfound::dynamics {

/// Weights b_j(a) of `a` over an orthonormal frame. Throws IncompleteFrame if
/// the frame is not orthogonal or the weights fall short of one by more than
/// kFrameTolerance.
MixedState collapse(const StateVector& a, std::span<const StateVector> frame);

/// A mixed state measured in another frame: weights sum_i w_i f_i(b_j).
MixedState measure(const MixedState& rho, std::span<const StateVector> frame);

/// The orthogonal partner of `b` in the plane spanned by `a` and `b`.
/// Throws std::invalid_argument if a and b are the same projective point.
StateVector antipode_in_plane(const StateVector& b, const StateVector& a);

struct Midpoint {
  StateVector c;
  StateVector c_prime;
  double lambda = 0.0;  ///< (1 + sqrt(a(b))) / 2
};

/// The orthogonal pair with (a + b)/2 = lambda c + (1 - lambda) c' as frame
/// functions: c is the normalized sum of a and b after rephasing a so that
/// <a, b> is real positive. Throws std::invalid_argument when a and b are
/// orthogonal or identical.
Midpoint tvn_midpoint(const StateVector& a, const StateVector& b);

struct TvnComparison {
  double p = 0.0;               ///< a(b)
  double h_direct = 0.0;        ///< entropy of F_b a
  double h_intermediate = 0.0;  ///< entropy of F_b F_x a
  bool used_antipode = false;   ///< x = c(a, b') because a(b) < 1/2
  VerificationReport report;    ///< passes iff h_intermediate < h_direct
};

/// Throws std::invalid_argument for a = b or a orthogonal to b.
TvnComparison tvn_compare(const StateVector& a, const StateVector& b);

/// sqrt(1 - born_probability(x, y)).
double crqm_distance(const StateVector& x, const StateVector& y);

struct ProjectorDistance {
  double law = 0.0;             ///< sqrt(1 - |<x|y>|^2)
  double top_eigenvalue = 0.0;  ///< largest eigenvalue of pi(x) - pi(y)
  double cubic_residual = 0.0;  ///< max |D^3 - (1 - p) D|
};

/// Builds D = pi(x) - pi(y) as a real symmetric operator (on R^(rN)) and
/// checks the cubic identity; its largest eigenvalue is the d-metric.
ProjectorDistance projector_distance(const StateVector& x, const StateVector& y);

/// (<0|H^2|0> - <0|H|0>^2)^(1/2) for normalized psi.
double dispersion(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& psi);

/// exp(-i tau H) by eigendecomposition. Throws std::invalid_argument if H is
/// not Hermitian within 1e-12.
Eigen::MatrixXcd evolution_operator(const Eigen::MatrixXcd& h, double tau);

inline constexpr double kZenoRegime = 0.1;

struct ZenoRun {
  double tau = 0.0;
  std::size_t steps = 0;
  double dispersion = 0.0;
  std::vector<double> survival;  ///< p_k, k = 0..n, p_0 = 1
  std::vector<double> bound;     ///< (1 - (tau Delta)^2)^k
  std::vector<double> overlap;   ///< |<k|k-1>|^2, index k = 1..n (index 0 unused)
  double asymptote = 0.0;        ///< exp(-tau T Delta^2), T = n tau
  bool in_regime = false;        ///< tau Delta <= kZenoRegime
  VerificationReport report;
};

/// Deterministic chain |k> = exp(-i tau H)|k-1>, p_k = prod |<i|i-1>|^2.
/// Checks 1 >= p_n >= bound_n within 1e-9; outside the regime violations are
/// reported as notes rather than failures.
ZenoRun zeno_chain(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& initial, double tau,
                   std::size_t steps);

/// Measurements in a fixed frame containing the initial state while H
/// drives the state: probability of never leaving it.
double watchdog_survival(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& initial, double tau,
                         std::size_t steps);

struct StochasticZeno {
  double fraction = 0.0;  ///< trajectories found in |n> after the last step
  double standard_error = 0.0;
  std::size_t trajectories = 0;
};

/// Samples collapse outcomes of the chain; the fraction of trajectories in
/// |n> is at least p_n in expectation.
StochasticZeno zeno_stochastic(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& initial,
                               double tau, std::size_t steps, std::size_t trajectories,
                               std::uint64_t seed);

/// Converts a complex state vector (ring R or C) to an Eigen vector.
Eigen::VectorXcd to_eigen(const StateVector& v);

/// Random Hermitian matrix with standard normal entries (GUE-like).
Eigen::MatrixXcd random_hermitian(std::size_t n, Engine& rng);

}  // namespace qfound::dynamics
