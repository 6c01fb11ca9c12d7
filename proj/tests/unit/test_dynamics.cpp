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
#include <numbers>

#include <catch_amalgamated.hpp>

#include "qfound/dynamics.hpp"
#include "qfound/entropy.hpp"

using namespace qfound;
using Catch::Approx;

namespace {

Eigen::MatrixXcd sigma_x() {
  Eigen::MatrixXcd h(2, 2);
  h << 0, 1, 1, 0;
  return h;
}

Eigen::VectorXcd ket0(Eigen::Index n = 2) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n);
  v(0) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("collapse onto a frame") {
  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<StateVector> frame{StateVector::real({1, 0}), StateVector::real({0, 1})};
  const auto m = dynamics::collapse(StateVector::real({s, s}), frame);
  CHECK(m.weights()[0] == Approx(0.5));
  CHECK(m.weights()[1] == Approx(0.5));
  CHECK(dynamics::collapse(frame[0], frame).weights() == std::vector<double>{1.0, 0.0});

  const std::vector<StateVector> skew{StateVector::real({1, 0}), StateVector::real({s, s})};
  CHECK_THROWS_AS(dynamics::collapse(frame[0], skew), IncompleteFrame);
  const std::vector<StateVector> partial{StateVector::real({1, 0, 0}), StateVector::real({0, 1, 0})};
  CHECK_THROWS_AS(dynamics::collapse(StateVector::real({0, 0, 1}), partial), IncompleteFrame);
}

TEST_CASE("measuring a mixture in another frame") {
  const double s = 1.0 / std::sqrt(2.0);
  const MixedState rho({StateVector::real({1, 0}), StateVector::real({0, 1})}, {0.8, 0.2});
  const std::vector<StateVector> diag{StateVector::real({s, s}), StateVector::real({s, -s})};
  const auto out = dynamics::measure(rho, diag);
  CHECK(out.weights()[0] == Approx(0.5));
  CHECK(out.weights()[1] == Approx(0.5));
}

TEST_CASE("antipode in the plane of two states") {
  const auto a = StateVector::real({1, 0});
  const auto b = StateVector::real({std::cos(0.3), std::sin(0.3)});
  const auto bp = dynamics::antipode_in_plane(b, a);
  CHECK(born_probability(b, bp) < 1e-24);
  CHECK(born_probability(a, b) + born_probability(a, bp) == Approx(1.0));
  CHECK_THROWS_AS(dynamics::antipode_in_plane(a, a), std::invalid_argument);
}

TEST_CASE("midpoint: lambda and orientation") {
  const auto a = StateVector::real({1, 0});
  const auto b = StateVector::real({0.5, std::sqrt(3.0) / 2});  // a(b) = 1/4 at pi/3
  const auto m = dynamics::tvn_midpoint(a, b);
  CHECK(m.lambda == Approx(0.75));
  CHECK(born_probability(m.c, StateVector::real({std::cos(std::numbers::pi / 6),
                                                 std::sin(std::numbers::pi / 6)})) ==
        Approx(1.0));
  CHECK(born_probability(m.c, m.c_prime) < 1e-24);

  const auto q = StateVector::complex({std::sqrt(0.75), {0, 0.5}});
  CHECK(dynamics::tvn_midpoint(StateVector::basis(Ring::C, 2, 0), q).lambda ==
        Approx((1 + std::sqrt(0.75)) / 2));

  CHECK_THROWS_AS(dynamics::tvn_midpoint(a, StateVector::real({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(dynamics::tvn_midpoint(a, StateVector::real({-2, 0})), std::invalid_argument);
}

TEST_CASE("midpoint identity (a + b)/2 = lambda c + (1 - lambda) c' on random probes") {
  for (Ring ring : {Ring::R, Ring::C, Ring::H}) {
    auto rng = make_engine(100 + static_cast<int>(ring));
    for (int t = 0; t < 100; ++t) {
      const auto a = sample_uniform_state(ring, 3, rng);
      const auto b = sample_uniform_state(ring, 3, rng);
      const auto m = dynamics::tvn_midpoint(a, b);
      CHECK(m.lambda == Approx((1 + std::sqrt(born_probability(a, b))) / 2).margin(1e-12));
      for (int k = 0; k < 5; ++k) {
        const auto z = sample_uniform_state(ring, 3, rng);
        const double lhs = 0.5 * (born_probability(a, z) + born_probability(b, z));
        const double rhs =
            m.lambda * born_probability(m.c, z) + (1 - m.lambda) * born_probability(m.c_prime, z);
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
    }
  }
}

TEST_CASE("an intermediate measurement lowers outcome entropy") {
  const auto a = StateVector::basis(Ring::C, 2, 0);
  const auto b = StateVector::complex({std::sqrt(0.75), {0, 0.5}});
  const auto r = dynamics::tvn_compare(a, b);
  CHECK(r.p == Approx(0.75));
  CHECK(r.h_direct == Approx(0.562335).margin(5e-7));
  CHECK(r.h_intermediate == Approx(0.376770).margin(5e-7));
  CHECK_FALSE(r.used_antipode);
  CHECK(r.report.passed());

  const auto low = dynamics::tvn_compare(a, StateVector::complex({0.5, {0, std::sqrt(0.75)}}));
  CHECK(low.used_antipode);
  CHECK(low.h_direct == Approx(0.562335).margin(5e-7));
  CHECK(low.h_intermediate < low.h_direct);

  CHECK_THROWS_AS(dynamics::tvn_compare(a, a), std::invalid_argument);
  CHECK_THROWS_AS(dynamics::tvn_compare(a, StateVector::basis(Ring::C, 2, 1)),
                  std::invalid_argument);
}

TEST_CASE("intermediate measurement: property over random pairs") {
  auto rng = make_engine(12);
  for (Ring ring : {Ring::R, Ring::C, Ring::H}) {
    for (int t = 0; t < 200; ++t) {
      const auto a = sample_uniform_state(ring, 2, rng);
      const auto b = sample_uniform_state(ring, 2, rng);
      const auto r = dynamics::tvn_compare(a, b);
      CHECK(r.h_intermediate < r.h_direct);
      CHECK(r.h_direct == Approx(entropy::binary_shannon(r.p)).margin(1e-12));
    }
  }
}

TEST_CASE("projector distance obeys the crqm law") {
  const auto e1 = StateVector::basis(Ring::C, 2, 0);
  const auto d = dynamics::projector_distance(e1, StateVector::complex({std::sqrt(0.75), 0.5}));
  CHECK(d.law == Approx(0.5));
  CHECK(d.top_eigenvalue == Approx(0.5).margin(1e-12));
  CHECK(d.cubic_residual < 1e-12);
  CHECK(dynamics::crqm_distance(e1, e1) == 0.0);

  auto rng = make_engine(21);
  for (Ring ring : {Ring::R, Ring::C, Ring::H}) {
    for (int t = 0; t < 50; ++t) {
      const auto x = sample_uniform_state(ring, 3, rng);
      const auto y = sample_uniform_state(ring, 3, rng);
      const auto r = dynamics::projector_distance(x, y);
      CHECK(std::abs(r.top_eigenvalue - r.law) < 1e-10);
      CHECK(r.cubic_residual < 1e-10);
      CHECK(r.law == Approx(dynamics::crqm_distance(x, y)).margin(1e-14));
    }
  }
  CHECK_THROWS_AS(dynamics::projector_distance(e1, StateVector::basis(Ring::R, 2, 0)),
                  std::invalid_argument);
}

TEST_CASE("zeno chain under sigma_x has a closed form") {
  const auto run = dynamics::zeno_chain(sigma_x(), ket0(), 0.01, 100);
  CHECK(run.dispersion == Approx(1.0));
  CHECK(run.in_regime);
  REQUIRE(run.survival.size() == 101);
  CHECK(run.survival[0] == 1.0);
  CHECK(run.survival[100] == Approx(std::pow(std::cos(0.01), 200)).epsilon(1e-12));
  CHECK(run.survival[100] == Approx(0.9900497).margin(1e-7));
  CHECK(run.bound[100] == Approx(0.9900493).margin(1e-7));
  CHECK(run.survival[100] >= run.bound[100]);
  CHECK(run.asymptote == Approx(std::exp(-0.01)).epsilon(1e-14));
  CHECK(run.report.passed());
  for (std::size_t k = 1; k <= 100; ++k) CHECK(run.overlap[k] == Approx(std::pow(std::cos(0.01), 2)));
}

TEST_CASE("zeno bound holds for random Hermitian generators") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto rng = make_engine(seed);
    const std::size_t n = 2 + seed % 5;
    const auto h = dynamics::random_hermitian(n, rng);
    const auto psi = ket0(static_cast<Eigen::Index>(n));
    const double delta = dynamics::dispersion(h, psi);
    const double tau = 0.05 / delta;
    const auto run = dynamics::zeno_chain(h, psi, tau, 200);
    CHECK(run.in_regime);
    CHECK(run.report.passed());
    for (std::size_t k = 0; k <= 200; ++k) {
      CHECK(run.survival[k] <= 1.0 + 1e-12);
      CHECK(run.survival[k] >= run.bound[k] - 1e-9);
    }
  }
}

TEST_CASE("zeno: survival tends to one as tau shrinks") {
  double previous = 0.0;
  for (double tau : {0.1, 0.01, 0.001, 0.0001}) {
    // Fixed total time T = 1.
    const auto run = dynamics::zeno_chain(sigma_x(), ket0(), tau, static_cast<std::size_t>(1.0 / tau + 0.5));
    const double p = run.survival.back();
    CHECK(p > previous);
    CHECK(std::abs(p - run.asymptote) < tau);
    previous = p;
  }
  CHECK(previous > 0.9998);
}

TEST_CASE("watchdog and stochastic chains") {
  const double w = dynamics::watchdog_survival(sigma_x(), ket0(), 0.01, 100);
  CHECK(w == Approx(std::pow(std::cos(0.01), 200)).epsilon(1e-12));

  const auto run = dynamics::zeno_chain(sigma_x(), ket0(), 0.1, 20);
  const auto s = dynamics::zeno_stochastic(sigma_x(), ket0(), 0.1, 20, 20'000, 3);
  CHECK(s.trajectories == 20'000);
  CHECK(s.fraction >= run.survival.back() - 4 * s.standard_error);
  const auto again = dynamics::zeno_stochastic(sigma_x(), ket0(), 0.1, 20, 20'000, 3);
  CHECK(again.fraction == s.fraction);
  CHECK_THROWS_AS(dynamics::zeno_stochastic(sigma_x(), ket0(), 0.1, 20, 0, 3),
                  std::invalid_argument);
}

TEST_CASE("zeno inputs are validated") {
  Eigen::MatrixXcd bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(dynamics::zeno_chain(bad, ket0(), 0.1, 10), std::invalid_argument);
  CHECK_THROWS_AS(dynamics::evolution_operator(bad, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(dynamics::zeno_chain(sigma_x(), ket0(3), 0.1, 10), std::invalid_argument);
  CHECK_THROWS_AS(dynamics::zeno_chain(sigma_x(), ket0(), 0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(dynamics::zeno_chain(sigma_x(), ket0(), 0.1, 0), std::invalid_argument);

  const auto u = dynamics::evolution_operator(sigma_x(), 0.3);
  CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(u(0, 0) - std::cos(0.3)) < 1e-14);
  CHECK_THROWS_AS(dynamics::to_eigen(StateVector::basis(Ring::H, 2, 0)), std::invalid_argument);
}
