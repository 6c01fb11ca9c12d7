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
#include <iosfwd>
#include <string>
#include <vector>

#include "qfound/algebra.hpp"
#include "qfound/ptable.hpp"
#include "qfound/report.hpp"

/// Sphere pictures of state spaces: arcs, midpoints, circular sets built by
/// adjunction, and the stereographic correspondence with projective lines.
namespace qfound::geometry {

/// Unit vector in R^(R+1). Throws std::invalid_argument unless the norm is
/// one within 1e-12.
class SpherePoint {
 public:
  explicit SpherePoint(std::vector<double> coords);
  /// Normalizes first; throws for a zero vector.
  static SpherePoint normalized(std::vector<double> coords);

  std::size_t ambient_dim() const noexcept { return coords_.size(); }
  int rank() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  const std::vector<double>& coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_.at(i); }

  SpherePoint antipode() const;

 private:
  std::vector<double> coords_;
};

double dot(const SpherePoint& a, const SpherePoint& b);

/// Great-circle angle in [0, pi].
double arc(const SpherePoint& a, const SpherePoint& b);

/// 2 arccos(sqrt(p)). Throws std::invalid_argument if p is outside [0, 1] by
/// more than 1e-12.
double theta_from_p(double p);

/// cos^2(theta / 2).
double p_from_theta(double theta);

/// |cos AZ + cos BZ - 2 cos(AB/2) cos CZ| with C the arc midpoint of A and
/// B. For antipodal A, B the midpoint is undefined and both sides vanish;
/// the residual returned is then |cos AZ + cos BZ|.
double spherical_midpoint_check(const SpherePoint& a, const SpherePoint& b, const SpherePoint& z);

/// A table together with its sphere image, point i of `points` standing for
/// element i of `table`.
struct ProperMapping {
  PTable table;
  std::vector<SpherePoint> points;
  std::vector<double> angles;  ///< position on the great circle, in [0, 2 pi)
  int rank = 2;
  double theta0 = 0.0;
  std::size_t depth = 0;
  bool ring_backed = true;  ///< false for ranks without a division ring (not 1, 2, 4)
  std::size_t seed_count = 0;  ///< leading elements a, b, a', b' (after deduplication)

  /// Spacing pi / 2^depth of the adjoined grid.
  double mesh() const;
};

/// Max over pairs |theta(x_i, x_j) - arc(X_i, X_j)|.
double proper_mapping_residual(const ProperMapping& m);

/// Max over pairs |p(x_i, x_j) - cos^2(arc / 2)|.
double born_arc_residual(const ProperMapping& m);

/// Seeds a = 0 and b = theta0 on a great circle of the rank-sphere, adjoins
/// their antipodes, then `depth` rounds of arc midpoints. Angles are exact
/// (theta0 / 2 + m pi / 2^depth) rather than iterated midpoints, so the result
/// holds 2^(depth+1) grid points plus the surviving seeds. Throws
/// std::invalid_argument for theta0 outside (0, pi), depth < 1, rank < 1.
ProperMapping build_circle_by_adjunction(double theta0, std::size_t depth, int rank = 2);

/// Verification of a mapping: Axiom I on the table and the proper-mapping
/// residuals.
VerificationReport check_proper_mapping(const ProperMapping& m, double eps = kDefaultTolerance);

/// "label,angle,x0,x1,..." with a header row.
void write_csv(std::ostream& os, const ProperMapping& m);

/// The CP^1 representative (cos(theta/2), e^(i phi) sin(theta/2)).
StateVector stereographic(double theta, double phi);

/// Bloch vector (sin t cos f, sin t sin f, cos t).
SpherePoint bloch_point(double theta, double phi);

/// Inverse stereographic map from S^r to the projective line over a ring of
/// real dimension r: (cos(t/2), u sin(t/2)) with cos t = X_0 and u the unit
/// ring element along (X_1 .. X_r). The quaternionic case is an extension.
/// Throws std::invalid_argument if the point's rank differs from the ring's.
StateVector sphere_to_state(Ring ring, const SpherePoint& x);

struct ZenithAzimuth {
  double theta = 0.0;
  double phi = 0.0;
};

/// |born(stereographic(a), stereographic(b)) - cos^2(arc / 2)|.
double born_vs_arc_check(const ZenithAzimuth& a, const ZenithAzimuth& b);

/// With a = alpha e1 + beta e2 and z = gamma e1 + delta e3 in C^3 (two
/// normal lines meeting at c = e1), returns |a(z) - a(c) c(z)|. Throws
/// std::invalid_argument if a or z is the zero vector.
double normal_factorization_check(std::complex<double> alpha, std::complex<double> beta,
                                  std::complex<double> gamma, std::complex<double> delta);

/// Orthonormalizes n random complex Gaussian vectors of C^n (modified
/// Gram-Schmidt).
std::vector<StateVector> random_orthonormal_basis(std::size_t n, Engine& rng);

/// Max entrywise |M M^dagger - I| for M_kj = <a_k, b_j> between two random
/// orthonormal bases of C^n. Throws std::invalid_argument for n < 2.
double basis_unitarity_check(std::size_t n, std::uint64_t seed);

/// Same, for given bases.
double basis_unitarity_residual(const std::vector<StateVector>& a,
                                const std::vector<StateVector>& b);

/// Largest mutually equatorial set (|p - 1/2| < eps) minus one. Throws
/// std::invalid_argument when no pair is equatorial.
int rank_detect(const PTable& t, double eps = 1e-6);

/// Whether a sphere of this rank is the state space of a division ring.
constexpr bool rank_has_ring(int rank) noexcept { return rank == 1 || rank == 2 || rank == 4; }

}  // namespace qfound::geometry
