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

#include "qfound/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qfound/entropy.hpp"

namespace qfound::dynamics {

namespace {

constexpr double kCompatibleTolerance = 1e-12;

}  // namespace

MixedState collapse(const StateVector& a, std::span<const StateVector> frame) {
  require_orthogonal(frame);
  std::vector<double> w;
  w.reserve(frame.size());
  for (const auto& b : frame) w.push_back(born_probability(a, b));
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (std::abs(total - 1.0) >= kFrameTolerance) {
    throw IncompleteFrame("frame does not span the state: weights sum to " +
                          std::to_string(total));
  }
  return {std::vector<StateVector>(frame.begin(), frame.end()), std::move(w)};
}

MixedState measure(const MixedState& rho, std::span<const StateVector> frame) {
  require_orthogonal(frame);
  std::vector<double> w(frame.size(), 0.0);
  for (std::size_t j = 0; j < frame.size(); ++j) w[j] = rho.evaluate(frame[j]);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (std::abs(total - 1.0) >= kFrameTolerance) {
    throw IncompleteFrame("frame does not span the mixed state: weights sum to " +
                          std::to_string(total));
  }
  return {std::vector<StateVector>(frame.begin(), frame.end()), std::move(w)};
}

StateVector antipode_in_plane(const StateVector& b, const StateVector& a) {
  const auto bh = b.normalized();
  const auto ah = a.normalized();
  if (born_probability(ah, bh) > 1.0 - kCompatibleTolerance) {
    throw std::invalid_argument("antipode in plane needs two distinct states");
  }
  // a - b <b, a>, the component of a orthogonal to b.
  return subtract(ah, bh.scaled_right(inner_product(bh, ah))).normalized();
}

Midpoint tvn_midpoint(const StateVector& a, const StateVector& b) {
  const double p = born_probability(a, b);
  if (p < kCompatibleTolerance) {
    throw std::invalid_argument("orthogonal states have no unique midpoint (lambda = 1/2)");
  }
  if (p > 1.0 - kCompatibleTolerance) throw std::invalid_argument("midpoint of identical states");
  const auto ah = a.normalized();
  const auto bh = b.normalized();
  const Quaternion s = inner_product(ah, bh);
  // conj(mu) s = |s| for mu = s / |s|.
  const auto aligned = ah.scaled_right((1.0 / s.abs()) * s);
  Midpoint m{add(aligned, bh).normalized(), subtract(aligned, bh).normalized(),
             0.5 * (1.0 + std::sqrt(p))};
  const double pac = born_probability(a, m.c);
  const double pbc = born_probability(b, m.c);
  if (std::abs(pac - m.lambda) >= kDefaultTolerance ||
      std::abs(pbc - m.lambda) >= kDefaultTolerance) {
    throw std::logic_error("midpoint postcondition failed");
  }
  return m;
}

TvnComparison tvn_compare(const StateVector& a, const StateVector& b) {
  TvnComparison out;
  out.p = born_probability(a, b);
  if (out.p > 1.0 - kCompatibleTolerance) throw std::invalid_argument("tvn_compare needs a != b");
  if (out.p < kCompatibleTolerance) {
    throw std::invalid_argument("tvn_compare needs non-orthogonal states");
  }
  const auto b_prime = antipode_in_plane(b, a);
  const std::vector<StateVector> frame_b{b.normalized(), b_prime};

  out.used_antipode = out.p < 0.5;
  const auto mid = out.used_antipode ? tvn_midpoint(a, b_prime) : tvn_midpoint(a, b);
  const std::vector<StateVector> frame_x{mid.c, mid.c_prime};

  out.h_direct = entropy::von_neumann(collapse(a, frame_b));
  out.h_intermediate = entropy::von_neumann(measure(collapse(a, frame_x), frame_b));

  out.report = {"tvn_effect", 0.0, {}, {}};
  out.report.add({{}, out.h_intermediate - out.h_direct, out.h_intermediate < out.h_direct,
                  out.used_antipode ? "intermediate frame c(a,b')" : "intermediate frame c(a,b)"});
  return out;
}

double crqm_distance(const StateVector& x, const StateVector& y) {
  return std::sqrt(1.0 - born_probability(x, y));
}

namespace {

// Unit of the ring along real coordinate `k` (0..r-1).
Quaternion ring_unit(int k) {
  switch (k) {
    case 0: return 1.0;
    case 1: return Quaternion::i();
    case 2: return Quaternion::j();
    default: return Quaternion::k();
  }
}

// pi(x) z = x <x, z> as a real matrix on R^(rN).
Eigen::MatrixXd real_projector(const StateVector& x) {
  const auto xh = x.normalized();
  const int r = real_dimension(x.ring());
  const auto n = static_cast<Eigen::Index>(x.dim());
  const Eigen::Index size = r * n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int k = 0; k < r; ++k) {
      // <x, e> for e = unit_k at component i.
      const Quaternion ip = xh[static_cast<std::size_t>(i)].conj() * ring_unit(k);
      const Eigen::Index col = i * r + k;
      for (Eigen::Index row_comp = 0; row_comp < n; ++row_comp) {
        const Quaternion v = xh[static_cast<std::size_t>(row_comp)] * ip;
        const double parts[4] = {v.w, v.x, v.y, v.z};
        for (int q = 0; q < r; ++q) m(row_comp * r + q, col) = parts[q];
      }
    }
  }
  return m;
}

}  // namespace

ProjectorDistance projector_distance(const StateVector& x, const StateVector& y) {
  if (x.ring() != y.ring() || x.dim() != y.dim()) {
    throw std::invalid_argument("projector_distance needs states of the same ring and dimension");
  }
  const double p = born_probability(x, y);
  const Eigen::MatrixXd d = real_projector(x) - real_projector(y);
  ProjectorDistance out;
  out.law = std::sqrt(1.0 - p);
  out.cubic_residual = (d * d * d - (1.0 - p) * d).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (d + d.transpose()),
                                                    Eigen::EigenvaluesOnly);
  out.top_eigenvalue = es.eigenvalues().maxCoeff();
  return out;
}

double dispersion(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& psi) {
  const Eigen::VectorXcd hp = h * psi;
  const double mean = psi.dot(hp).real();   // dot conjugates the left argument
  const double second = hp.squaredNorm();   // <psi|H^2|psi> for Hermitian H
  return std::sqrt(std::max(second - mean * mean, 0.0));
}

namespace {

void require_hermitian(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols() || h.rows() == 0) throw std::invalid_argument("H must be square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("H is not Hermitian within 1e-12");
  }
}

Eigen::VectorXcd normalized_initial(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& initial) {
  if (initial.size() != h.rows()) throw std::invalid_argument("initial state has wrong dimension");
  const double n = initial.norm();
  if (n == 0.0) throw std::invalid_argument("initial state is zero");
  return initial / n;
}

}  // namespace

Eigen::MatrixXcd evolution_operator(const Eigen::MatrixXcd& h, double tau) {
  require_hermitian(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (h + h.adjoint()));
  const Eigen::VectorXd& e = es.eigenvalues();
  Eigen::VectorXcd phases(e.size());
  for (Eigen::Index k = 0; k < e.size(); ++k) phases(k) = std::polar(1.0, -tau * e(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

ZenoRun zeno_chain(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& initial, double tau,
                   std::size_t steps) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  if (steps == 0) throw std::invalid_argument("steps must be >= 1");
  require_hermitian(h);
  const Eigen::VectorXcd psi0 = normalized_initial(h, initial);
  const Eigen::MatrixXcd u = evolution_operator(h, tau);

  ZenoRun run;
  run.tau = tau;
  run.steps = steps;
  run.dispersion = dispersion(h, psi0);
  const double x = tau * run.dispersion;
  // A few ulps of slack: tau is often chosen as kZenoRegime / Delta.
  run.in_regime = x <= kZenoRegime * (1.0 + 1e-12);
  run.asymptote = std::exp(-tau * (tau * static_cast<double>(steps)) * run.dispersion *
                           run.dispersion);
  run.survival.assign(steps + 1, 1.0);
  run.bound.assign(steps + 1, 1.0);
  run.overlap.assign(steps + 1, 1.0);

  Eigen::VectorXcd prev = psi0;
  const double per_step_bound = 1.0 - x * x;
  for (std::size_t k = 1; k <= steps; ++k) {
    Eigen::VectorXcd next = u * prev;
    next.normalize();
    run.overlap[k] = std::norm(next.dot(prev));
    run.survival[k] = run.survival[k - 1] * run.overlap[k];
    run.bound[k] = run.bound[k - 1] * per_step_bound;
    prev = std::move(next);
  }

  constexpr double tol = 1e-9;
  run.report = {"zeno_bound", tol, {}, {}};
  std::size_t flipped = 0;
  for (std::size_t k = 1; k <= steps; ++k) {
    const bool upper = run.survival[k] <= 1.0 + tol;
    const bool lower = run.survival[k] >= run.bound[k] - tol;
    if (upper && lower) continue;
    if (run.in_regime) {
      run.report.add({{k}, run.bound[k] - run.survival[k], false, "p_k below the bound"});
    } else {
      ++flipped;
    }
  }
  if (run.report.passed()) {
    run.report.add({{steps}, run.survival[steps] - run.bound[steps], true, "p_n - bound_n"});
  }
  if (!run.in_regime) {
    run.report.note("tau*Delta = " + std::to_string(x) + " exceeds " + std::to_string(kZenoRegime) +
                    "; " + std::to_string(flipped) + " steps where the second-order bound fails");
  }
  run.report.note("asymptote exp(-tau T Delta^2) = " + std::to_string(run.asymptote));
  return run;
}

double watchdog_survival(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& initial, double tau,
                         std::size_t steps) {
  const Eigen::VectorXcd psi0 = normalized_initial(h, initial);
  const Eigen::MatrixXcd u = evolution_operator(h, tau);
  double p = 1.0;
  for (std::size_t k = 0; k < steps; ++k) {
    // Evolve, then project back onto the initial state of the fixed frame.
    const Eigen::VectorXcd evolved = u * psi0;
    p *= std::norm(psi0.dot(evolved));
  }
  return p;
}

StochasticZeno zeno_stochastic(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& initial,
                               double tau, std::size_t steps, std::size_t trajectories,
                               std::uint64_t seed) {
  if (trajectories == 0) throw std::invalid_argument("trajectories must be >= 1");
  const Eigen::VectorXcd psi0 = normalized_initial(h, initial);
  const Eigen::MatrixXcd u = evolution_operator(h, tau);
  std::vector<Eigen::VectorXcd> targets{psi0};
  for (std::size_t k = 1; k <= steps; ++k) targets.push_back((u * targets.back()).normalized());

  auto rng = make_engine(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trajectories; ++t) {
    Eigen::VectorXcd psi = psi0;
    bool on_target = true;
    for (std::size_t k = 1; k <= steps; ++k) {
      const std::complex<double> amp = targets[k].dot(psi);
      const double pass = std::norm(amp);
      if (uniform(rng) < pass) {
        psi = targets[k];
        on_target = true;
      } else {
        psi -= amp * targets[k];
        const double n = psi.norm();
        if (n > 0.0) psi /= n;
        on_target = false;
      }
    }
    if (on_target) ++hits;
  }
  StochasticZeno out;
  out.trajectories = trajectories;
  out.fraction = static_cast<double>(hits) / static_cast<double>(trajectories);
  out.standard_error =
      std::sqrt(out.fraction * (1.0 - out.fraction) / static_cast<double>(trajectories));
  return out;
}

Eigen::VectorXcd to_eigen(const StateVector& v) {
  if (v.ring() == Ring::H) throw std::invalid_argument("quaternionic state has no complex form");
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.dim()));
  for (std::size_t i = 0; i < v.dim(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].to_complex();
  return out;
}

Eigen::MatrixXcd random_hermitian(std::size_t n, Engine& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd a(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) a(i, j) = {normal(rng), normal(rng)};
  return 0.5 * (a + a.adjoint());
}

}  // namespace qfound::dynamics
