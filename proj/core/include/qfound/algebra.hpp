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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/// Scalars over the three coordinate rings, state vectors, and the Born rule.
namespace qfound {

/// Default comparison tolerance for analytic quantities.
inline constexpr double kDefaultTolerance = 1e-9;

/// Coordinate ring of a state space: real, complex or quaternionic.
enum class Ring { R, C, H };

/// Real dimension of the ring (1, 2, 4). This is also the rank of the
/// corresponding qubit sphere.
constexpr int real_dimension(Ring ring) noexcept {
  switch (ring) {
    case Ring::R: return 1;
    case Ring::C: return 2;
    case Ring::H: return 4;
  }
  return 0;
}

constexpr int rank_of(Ring ring) noexcept { return real_dimension(ring); }

std::string_view to_string(Ring ring) noexcept;

/// Parses "R", "C" or "H" (case-insensitive). Throws std::invalid_argument.
Ring parse_ring(std::string_view text);

/// Quaternion w + x i + y j + z k. Complex numbers embed as (w, x, 0, 0),
/// reals as (w, 0, 0, 0).
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double re) : w(re) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr Quaternion(std::complex<double> c)  // NOLINT
      : w(c.real()), x(c.imag()) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double abs() const;
  /// Multiplicative inverse; throws std::domain_error for zero.
  Quaternion inverse() const;

  constexpr bool is_real(double tol = 0.0) const {
    return (x < 0 ? -x : x) <= tol && is_complex(tol);
  }
  constexpr bool is_complex(double tol = 0.0) const {
    return (y < 0 ? -y : y) <= tol && (z < 0 ? -z : z) <= tol;
  }
  std::complex<double> to_complex() const { return {w, x}; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}
constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }

/// Hamilton product. Non-commutative.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion& operator+=(Quaternion& a, const Quaternion& b) { return a = a + b; }

constexpr Quaternion quaternion_multiply(const Quaternion& a, const Quaternion& b) {
  return a * b;
}

/// A pure state: a nonzero vector over the given ring. Vectors that differ by
/// a right scalar factor (v ~ v*lambda) are the same projective point.
class StateVector {
 public:
  /// Throws std::invalid_argument if empty, all-zero, or if a component does
  /// not belong to the declared ring.
  StateVector(Ring ring, std::vector<Quaternion> components);

  static StateVector real(std::initializer_list<double> xs);
  static StateVector complex(std::initializer_list<std::complex<double>> zs);
  static StateVector quaternion(std::initializer_list<Quaternion> qs);
  static StateVector basis(Ring ring, std::size_t dim, std::size_t index);

  Ring ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return components_.size(); }
  std::span<const Quaternion> components() const noexcept { return components_; }
  const Quaternion& operator[](std::size_t i) const { return components_.at(i); }

  double norm2() const;
  double norm() const;
  StateVector normalized() const;

  /// v * lambda (right multiplication), the projective equivalence action.
  StateVector scaled_right(const Quaternion& lambda) const;

  /// Returns the same vector re-tagged with a bigger ring (R -> C -> H).
  StateVector promoted(Ring target) const;

  /// Real coordinates, r per component in order (w[, x[, y, z]]).
  std::vector<double> real_coordinates() const;

 private:
  Ring ring_;
  std::vector<Quaternion> components_;
};

/// Sum of conj(u_i) * v_i. Throws std::invalid_argument on ring or dimension
/// mismatch.
Quaternion inner_product(const StateVector& u, const StateVector& v);

/// |<u,v>|^2 / (|u|^2 |v|^2), clamped to [0, 1].
double born_probability(const StateVector& u, const StateVector& v);

/// u + v and u - v for two vectors of the same ring and dimension.
StateVector add(const StateVector& u, const StateVector& v);
StateVector subtract(const StateVector& u, const StateVector& v);

using Engine = std::mt19937_64;

/// Engine for sub-stream `worker` of a run seeded with `seed`. Worker 0 of a
/// single-stream run is the reproducibility reference.
Engine make_engine(std::uint64_t seed, std::uint64_t worker = 0);

/// Pure state drawn from the rotation-invariant measure: r*N standard normal
/// real coordinates, normalized. Throws std::invalid_argument for dim == 0.
StateVector sample_uniform_state(Ring ring, std::size_t dim, Engine& rng);

/// Uniform point on the unit sphere in R^n (as a coordinate vector).
std::vector<double> sample_unit_sphere(std::size_t n, Engine& rng);

}  // namespace qfound
