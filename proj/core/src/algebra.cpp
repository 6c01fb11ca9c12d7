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

#include "qfound/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace qfound {

std::string_view to_string(Ring ring) noexcept {
  switch (ring) {
    case Ring::R: return "R";
    case Ring::C: return "C";
    case Ring::H: return "H";
  }
  return "?";
}

Ring parse_ring(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'R': return Ring::R;
      case 'C': return Ring::C;
      case 'H': return Ring::H;
      default: break;
    }
  }
  throw std::invalid_argument("unknown ring '" + std::string(text) + "' (expected R, C or H)");
}

double Quaternion::abs() const { return std::sqrt(norm2()); }

Quaternion Quaternion::inverse() const {
  const double n2 = norm2();
  if (n2 == 0.0) throw std::domain_error("inverse of zero quaternion");
  return (1.0 / n2) * conj();
}

namespace {

bool belongs_to(Ring ring, const Quaternion& q) {
  switch (ring) {
    case Ring::R: return q.is_real();
    case Ring::C: return q.is_complex();
    case Ring::H: return true;
  }
  return false;
}

void require_compatible(const StateVector& u, const StateVector& v) {
  if (u.ring() != v.ring()) {
    throw std::invalid_argument("ring mismatch: " + std::string(to_string(u.ring())) +
                                " vs " + std::string(to_string(v.ring())));
  }
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                                std::to_string(v.dim()));
  }
}

}  // namespace

StateVector::StateVector(Ring ring, std::vector<Quaternion> components)
    : ring_(ring), components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("state vector must have dim >= 1");
  bool nonzero = false;
  for (const auto& q : components_) {
    if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) ||
        !std::isfinite(q.z)) {
      throw std::invalid_argument("state vector component is not finite");
    }
    if (!belongs_to(ring_, q)) {
      throw std::invalid_argument("component outside ring " + std::string(to_string(ring_)));
    }
    nonzero = nonzero || q.norm2() > 0.0;
  }
  if (!nonzero) throw std::invalid_argument("state vector is zero");
}

StateVector StateVector::real(std::initializer_list<double> xs) {
  return {Ring::R, std::vector<Quaternion>(xs.begin(), xs.end())};
}

StateVector StateVector::complex(std::initializer_list<std::complex<double>> zs) {
  return {Ring::C, std::vector<Quaternion>(zs.begin(), zs.end())};
}

StateVector StateVector::quaternion(std::initializer_list<Quaternion> qs) {
  return {Ring::H, std::vector<Quaternion>(qs)};
}

StateVector StateVector::basis(Ring ring, std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  std::vector<Quaternion> v(dim);
  v[index] = 1.0;
  return {ring, std::move(v)};
}

double StateVector::norm2() const {
  double s = 0.0;
  for (const auto& q : components_) s += q.norm2();
  return s;
}

double StateVector::norm() const { return std::sqrt(norm2()); }

StateVector StateVector::normalized() const {
  const double n = norm();
  std::vector<Quaternion> out(components_.size());
  std::transform(components_.begin(), components_.end(), out.begin(),
                 [n](const Quaternion& q) { return (1.0 / n) * q; });
  return {ring_, std::move(out)};
}

StateVector StateVector::scaled_right(const Quaternion& lambda) const {
  std::vector<Quaternion> out(components_.size());
  std::transform(components_.begin(), components_.end(), out.begin(),
                 [&](const Quaternion& q) { return q * lambda; });
  return {ring_, std::move(out)};
}

StateVector StateVector::promoted(Ring target) const {
  if (real_dimension(target) < real_dimension(ring_)) {
    throw std::invalid_argument("cannot demote a state vector to a smaller ring");
  }
  return {target, components_};
}

std::vector<double> StateVector::real_coordinates() const {
  const int r = real_dimension(ring_);
  std::vector<double> out;
  out.reserve(components_.size() * static_cast<std::size_t>(r));
  for (const auto& q : components_) {
    out.push_back(q.w);
    if (r >= 2) out.push_back(q.x);
    if (r == 4) {
      out.push_back(q.y);
      out.push_back(q.z);
    }
  }
  return out;
}

Quaternion inner_product(const StateVector& u, const StateVector& v) {
  require_compatible(u, v);
  Quaternion s;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i].conj() * v[i];
  return s;
}

double born_probability(const StateVector& u, const StateVector& v) {
  const double p = inner_product(u, v).norm2() / (u.norm2() * v.norm2());
  return std::clamp(p, 0.0, 1.0);
}

StateVector add(const StateVector& u, const StateVector& v) {
  require_compatible(u, v);
  std::vector<Quaternion> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] + v[i];
  return {u.ring(), std::move(out)};
}

StateVector subtract(const StateVector& u, const StateVector& v) {
  require_compatible(u, v);
  std::vector<Quaternion> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] - v[i];
  return {u.ring(), std::move(out)};
}

Engine make_engine(std::uint64_t seed, std::uint64_t worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker),
                    static_cast<std::uint32_t>(worker >> 32)};
  return Engine(seq);
}

std::vector<double> sample_unit_sphere(std::size_t n, Engine& rng) {
  if (n == 0) throw std::invalid_argument("sphere ambient dimension must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> xs(n);
  double n2 = 0.0;
  // A draw of exactly zero norm has probability zero; redraw if it happens.
  while (n2 == 0.0) {
    n2 = 0.0;
    for (auto& x : xs) {
      x = normal(rng);
      n2 += x * x;
    }
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& x : xs) x *= inv;
  return xs;
}

StateVector sample_uniform_state(Ring ring, std::size_t dim, Engine& rng) {
  if (dim == 0) throw std::invalid_argument("dimension must be >= 1");
  const auto r = static_cast<std::size_t>(real_dimension(ring));
  const auto xs = sample_unit_sphere(r * dim, rng);
  std::vector<Quaternion> comps(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double* c = xs.data() + i * r;
    switch (ring) {
      case Ring::R: comps[i] = Quaternion(c[0]); break;
      case Ring::C: comps[i] = Quaternion(c[0], c[1], 0, 0); break;
      case Ring::H: comps[i] = Quaternion(c[0], c[1], c[2], c[3]); break;
    }
  }
  return {ring, std::move(comps)};
}

}  // namespace qfound
