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

#include "qfound/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <Eigen/Dense>

namespace qfound::geometry {

namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void require_same_sphere(const SpherePoint& a, const SpherePoint& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("sphere points live in different dimensions");
  }
}

double wrap(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

// Circular distance between two angles, in [0, pi].
double angular_gap(double a, double b) {
  const double d = wrap(a - b);
  return std::min(d, kTwoPi - d);
}

}  // namespace

SpherePoint::SpherePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::invalid_argument("a sphere point needs at least 2 coordinates");
  for (double x : coords_) {
    if (!std::isfinite(x)) throw std::invalid_argument("sphere point has a non-finite coordinate");
  }
  if (std::abs(norm_of(coords_) - 1.0) > kUnitTolerance) {
    throw std::invalid_argument("sphere point is not a unit vector");
  }
}

SpherePoint SpherePoint::normalized(std::vector<double> coords) {
  const double n = norm_of(coords);
  if (!(n > 0.0)) throw std::invalid_argument("cannot normalize the zero vector");
  for (auto& x : coords) x /= n;
  return SpherePoint(std::move(coords));
}

SpherePoint SpherePoint::antipode() const {
  auto c = coords_;
  for (auto& x : c) x = -x;
  return SpherePoint(std::move(c));
}

double dot(const SpherePoint& a, const SpherePoint& b) {
  require_same_sphere(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.ambient_dim(); ++i) s += a[i] * b[i];
  return s;
}

double arc(const SpherePoint& a, const SpherePoint& b) {
  require_same_sphere(a, b);
  // 2 atan2(|a - b|, |a + b|) stays accurate near 0 and pi, unlike acos.
  double diff = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < a.ambient_dim(); ++i) {
    diff += (a[i] - b[i]) * (a[i] - b[i]);
    sum += (a[i] + b[i]) * (a[i] + b[i]);
  }
  return 2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum));
}

double theta_from_p(double p) {
  if (!(p >= -kUnitTolerance && p <= 1.0 + kUnitTolerance)) {
    throw std::invalid_argument("probability " + std::to_string(p) + " is outside [0, 1]");
  }
  p = std::clamp(p, 0.0, 1.0);
  return 2.0 * std::atan2(std::sqrt(1.0 - p), std::sqrt(p));
}

double p_from_theta(double theta) {
  const double c = std::cos(0.5 * theta);
  return c * c;
}

double spherical_midpoint_check(const SpherePoint& a, const SpherePoint& b, const SpherePoint& z) {
  require_same_sphere(a, b);
  require_same_sphere(a, z);
  std::vector<double> mid(a.ambient_dim());
  for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = a[i] + b[i];
  const double lhs = dot(a, z) + dot(b, z);
  if (norm_of(mid) < kUnitTolerance) return std::abs(lhs);
  const auto c = SpherePoint::normalized(std::move(mid));
  return std::abs(lhs - 2.0 * std::cos(0.5 * arc(a, b)) * dot(c, z));
}

double ProperMapping::mesh() const {
  return std::numbers::pi / std::ldexp(1.0, static_cast<int>(depth));
}

double proper_mapping_residual(const ProperMapping& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    for (std::size_t j = i + 1; j < m.points.size(); ++j) {
      worst = std::max(worst, std::abs(theta_from_p(m.table(i, j)) - arc(m.points[i], m.points[j])));
    }
  }
  return worst;
}

double born_arc_residual(const ProperMapping& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    for (std::size_t j = i + 1; j < m.points.size(); ++j) {
      worst = std::max(worst,
                       std::abs(m.table(i, j) - p_from_theta(arc(m.points[i], m.points[j]))));
    }
  }
  return worst;
}

ProperMapping build_circle_by_adjunction(double theta0, std::size_t depth, int rank) {
  if (!(theta0 > 0.0 && theta0 < std::numbers::pi)) {
    throw std::invalid_argument("initial separation must lie strictly between 0 and pi");
  }
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (depth > 20) throw std::invalid_argument("depth must be <= 20");
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");

  std::vector<std::string> labels;
  std::vector<double> angles;
  auto adjoin = [&](std::string label, double angle) {
    angle = wrap(angle);
    for (double seen : angles) {
      if (angular_gap(seen, angle) < kUnitTolerance) return;
    }
    labels.push_back(std::move(label));
    angles.push_back(angle);
  };

  // Seeds and their antipodes, then the midpoint grid: the first round puts
  // c(a,b) and c(a,b') a quarter turn apart, and each later round halves the
  // spacing of the set built so far.
  adjoin("a", 0.0);
  adjoin("b", theta0);
  adjoin("a'", std::numbers::pi);
  adjoin("b'", theta0 + std::numbers::pi);
  const std::size_t seeds = angles.size();
  const std::size_t grid = std::size_t{1} << (depth + 1);
  const double step = kTwoPi / static_cast<double>(grid);
  for (std::size_t m = 0; m < grid; ++m) {
    adjoin("e" + std::to_string(m + 1), 0.5 * theta0 + static_cast<double>(m) * step);
  }

  const std::size_t n = angles.size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      rows[i][j] = rows[j][i] = p_from_theta(angles[i] - angles[j]);
    }
  }

  ProperMapping m;
  m.table = PTable(labels, rows);
  m.angles = angles;
  m.rank = rank;
  m.theta0 = theta0;
  m.depth = depth;
  m.ring_backed = rank_has_ring(rank);
  m.seed_count = seeds;
  m.points.reserve(n);
  for (double a : angles) {
    std::vector<double> c(static_cast<std::size_t>(rank) + 1, 0.0);
    c[0] = std::cos(a);
    c[1] = std::sin(a);
    m.points.push_back(SpherePoint::normalized(std::move(c)));
  }
  return m;
}

VerificationReport check_proper_mapping(const ProperMapping& m, double eps) {
  VerificationReport r{"proper_mapping", eps, {}, {}};
  const auto axiom = check_axiom_one(m.table, eps);
  r.merge(axiom);
  if (!axiom.passed()) r.add({{}, axiom.worst_residual(), false, "axiom one"});
  const double theta_res = proper_mapping_residual(m);
  r.add({{}, theta_res, theta_res < eps, "max |theta(x,y) - arc(X,Y)|"});
  const double p_res = born_arc_residual(m);
  r.add({{}, p_res, p_res < eps, "max |p(x,y) - cos^2(arc/2)|"});
  r.note(std::to_string(m.table.size()) + " points, mesh pi/2^" + std::to_string(m.depth));
  if (!m.ring_backed) {
    r.note("rank " + std::to_string(m.rank) + " has no division ring; no Born-rule model backs it");
  }
  return r;
}

void write_csv(std::ostream& os, const ProperMapping& m) {
  os << "label,angle";
  for (int k = 0; k <= m.rank; ++k) os << ",x" << k;
  os << '\n';
  const auto old = os.precision(17);
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    os << m.table.label(i) << ',' << m.angles[i];
    for (double x : m.points[i].coords()) os << ',' << x;
    os << '\n';
  }
  os.precision(old);
}

StateVector stereographic(double theta, double phi) {
  return StateVector::complex({std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi)});
}

SpherePoint bloch_point(double theta, double phi) {
  return SpherePoint::normalized(
      {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)});
}

StateVector sphere_to_state(Ring ring, const SpherePoint& x) {
  const int r = real_dimension(ring);
  if (x.rank() != r) {
    throw std::invalid_argument("sphere of rank " + std::to_string(x.rank()) +
                                " does not match ring " + std::string(to_string(ring)));
  }
  const double x0 = std::clamp(x[0], -1.0, 1.0);
  const double c = std::sqrt(0.5 * (1.0 + x0));
  const double s = std::sqrt(0.5 * (1.0 - x0));
  double tail[4] = {0.0, 0.0, 0.0, 0.0};
  double tail_norm = 0.0;
  for (int k = 0; k < r; ++k) {
    tail[k] = x[static_cast<std::size_t>(k) + 1];
    tail_norm += tail[k] * tail[k];
  }
  tail_norm = std::sqrt(tail_norm);
  Quaternion u = 1.0;
  if (tail_norm > 0.0) {
    u = Quaternion(tail[0], tail[1], tail[2], tail[3]);
    u = (1.0 / tail_norm) * u;
  }
  return StateVector(ring, {c, s * u});
}

double born_vs_arc_check(const ZenithAzimuth& a, const ZenithAzimuth& b) {
  const double p = born_probability(stereographic(a.theta, a.phi), stereographic(b.theta, b.phi));
  return std::abs(p - p_from_theta(arc(bloch_point(a.theta, a.phi), bloch_point(b.theta, b.phi))));
}

double normal_factorization_check(std::complex<double> alpha, std::complex<double> beta,
                                  std::complex<double> gamma, std::complex<double> delta) {
  if (std::norm(alpha) + std::norm(beta) == 0.0 || std::norm(gamma) + std::norm(delta) == 0.0) {
    throw std::invalid_argument("normal factorization needs nonzero a and z");
  }
  const auto a = StateVector::complex({alpha, beta, 0.0});
  const auto z = StateVector::complex({gamma, 0.0, delta});
  const auto c = StateVector::basis(Ring::C, 3, 0);
  return std::abs(born_probability(a, z) - born_probability(a, c) * born_probability(c, z));
}

std::vector<StateVector> random_orthonormal_basis(std::size_t n, Engine& rng) {
  if (n == 0) throw std::invalid_argument("basis dimension must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto m = static_cast<Eigen::Index>(n);
  std::vector<Eigen::VectorXcd> vs;
  while (vs.size() < n) {
    Eigen::VectorXcd v(m);
    for (Eigen::Index i = 0; i < m; ++i) v(i) = {normal(rng), normal(rng)};
    // Two passes of modified Gram-Schmidt keep the basis orthogonal to
    // machine precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : vs) v -= q.dot(v) * q;
    }
    const double len = v.norm();
    if (len < 1e-8) continue;  // numerically dependent draw
    vs.push_back(v / len);
  }
  std::vector<StateVector> out;
  out.reserve(n);
  for (const auto& v : vs) {
    std::vector<Quaternion> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = v(static_cast<Eigen::Index>(i));
    out.emplace_back(Ring::C, std::move(q));
  }
  return out;
}

double basis_unitarity_residual(const std::vector<StateVector>& a,
                                const std::vector<StateVector>& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("bases differ in size");
  const auto n = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(k, j) = inner_product(a[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(j)])
                    .to_complex();
    }
  }
  return (m * m.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

double basis_unitarity_check(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("basis unitarity needs N >= 2");
  auto rng = make_engine(seed);
  const auto a = random_orthonormal_basis(n, rng);
  const auto b = random_orthonormal_basis(n, rng);
  return basis_unitarity_residual(a, b);
}

int rank_detect(const PTable& t, double eps) {
  const std::size_t n = t.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && std::abs(t(i, j) - 0.5) < eps && std::abs(t(j, i) - 0.5) < eps) {
        adj[i][j] = true;
        any = true;
      }
    }
  }
  if (!any) throw std::invalid_argument("table has no equatorial pairs");
  return static_cast<int>(maximum_clique_size(adj)) - 1;
}

}  // namespace qfound::geometry
