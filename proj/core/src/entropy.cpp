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

#include "qfound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "qfound/models.hpp"
#include "qfound/numerics.hpp"
#include "qfound/ptable.hpp"

namespace qfound::entropy {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

struct Moments {
  double sum = 0.0;
  double sum2 = 0.0;
  std::size_t n = 0;

  void add(double v) {
    sum += v;
    sum2 += v * v;
    ++n;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sum2 += o.sum2;
    n += o.n;
  }
  double mean() const { return sum / static_cast<double>(n); }
  double standard_error() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = (sum2 - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
    return std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
  }
};

// Runs fn(sample_count, engine, moments) on independent sub-streams and
// merges in worker order.
template <typename Fn>
Moments run_streams(std::size_t samples, std::uint64_t seed, std::size_t workers, Fn fn) {
  if (workers <= 1) {
    Moments m;
    auto rng = make_engine(seed, 0);
    fn(samples, rng, m);
    return m;
  }
  std::vector<Moments> parts(workers);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t share = samples / workers + (w < samples % workers ? 1 : 0);
    threads.emplace_back([&, w, share] {
      auto rng = make_engine(seed, w);
      fn(share, rng, parts[w]);
    });
  }
  for (auto& t : threads) t.join();
  Moments total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

}  // namespace

double shannon(std::span<const double> q) {
  if (q.empty()) throw std::invalid_argument("shannon entropy of an empty distribution");
  double total = 0.0;
  for (double v : q) {
    if (!(v >= 0.0)) throw std::invalid_argument("probabilities must be non-negative");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(total) + ", not 1");
  }
  double h = 0.0;
  for (double v : q) h -= xlogx(v);
  return h;
}

double binary_shannon(double p) {
  p = std::clamp(p, 0.0, 1.0);
  return -xlogx(p) - xlogx(1.0 - p);
}

double purity_shannon(double delta) { return binary_shannon(0.5 * (1.0 + delta)); }

double von_neumann(const MixedState& m) {
  // Weights were validated to sum to one within kFrameTolerance; renormalize
  // so shannon's stricter check applies to the distribution, not rounding.
  auto w = m.weights();
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& v : w) v = std::max(v, 0.0) / total;
  return shannon(w);
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::ExactFrames: return "exact-frames";
    case Method::Quadrature: return "quadrature";
    case Method::MonteCarlo: return "monte-carlo";
  }
  return "?";
}

EntropyResult purity_average(int rank, const std::function<double(double)>& g,
                             const AverageMethod& method) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  auto checked = [&g](double d) {
    const double v = g(d);
    if (!std::isfinite(v)) {
      throw std::domain_error("purity function is not finite at delta = " + std::to_string(d));
    }
    return v;
  };

  if (const auto* q = std::get_if<QuadratureSpec>(&method)) {
    // d = sin u: (1 - d^2)^((R-2)/2) dd = cos^(R-1) u du on [0, pi/2].
    const auto rule = numerics::gauss_legendre(q->nodes, 0.0, std::numbers::pi / 2);
    const double power = static_cast<double>(rank - 1);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = rule.nodes[i];
      const double weight = rule.weights[i] * std::pow(std::cos(u), power);
      num += weight * checked(std::sin(u));
      den += weight;
    }
    return {num / den, Method::Quadrature, 0.0};
  }

  const auto& mc = std::get<MonteCarloSpec>(method);
  if (mc.samples == 0) throw std::invalid_argument("samples must be >= 1");
  const auto dim = static_cast<std::size_t>(rank) + 1;
  const Moments m = run_streams(mc.samples, mc.seed, mc.workers,
                                [&](std::size_t n, Engine& rng, Moments& acc) {
                                  for (std::size_t s = 0; s < n; ++s) {
                                    const auto xi = sample_unit_sphere(dim, rng);
                                    acc.add(checked(std::abs(xi[0])));
                                  }
                                });
  return {m.mean(), Method::MonteCarlo, m.standard_error()};
}

EntropyResult info_entropy_qubit(Ring ring, const AverageMethod& method) {
  return purity_average(rank_of(ring), purity_shannon, method);
}

EntropyResult info_entropy_mc(Ring ring, std::size_t samples, std::uint64_t seed,
                              std::size_t workers) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  const auto e1 = StateVector::basis(ring, 2, 0);
  const Moments m = run_streams(samples, seed, workers,
                                [&](std::size_t n, Engine& rng, Moments& acc) {
                                  for (std::size_t s = 0; s < n; ++s) {
                                    const auto y = sample_uniform_state(ring, 2, rng);
                                    acc.add(binary_shannon(born_probability(e1, y)));
                                  }
                                });
  return {m.mean(), Method::MonteCarlo, m.standard_error()};
}

double info_entropy_skeleton(int rank) {
  const auto t = models::skeleton_table(rank);
  const auto frames = enumerate_frames(t);
  double total = 0.0;
  for (const auto& f : frames) {
    std::vector<double> q;
    for (auto j : f.indices) q.push_back(t(0, j));
    total += shannon(q);
  }
  return total / static_cast<double>(frames.size());
}

std::vector<double> sample_purities(Ring ring, std::size_t samples, std::uint64_t seed) {
  const auto e1 = StateVector::basis(ring, 2, 0);
  auto rng = make_engine(seed);
  std::vector<double> out(samples);
  for (auto& d : out) {
    const auto y = sample_uniform_state(ring, 2, rng);
    d = std::abs(2.0 * born_probability(e1, y) - 1.0);
  }
  return out;
}

double purity_exponent(Ring ring) { return (rank_of(ring) - 2) / 2.0; }

namespace {

KsOutcome ks_outcome(const std::vector<double>& samples, const std::function<double(double)>& cdf) {
  KsOutcome o;
  o.statistic = numerics::ks_statistic(samples, cdf);
  o.scaled = std::sqrt(static_cast<double>(samples.size())) * o.statistic;
  o.passed = o.scaled < kKsThreshold;
  return o;
}

}  // namespace

AxiomFiveResult axiom_five_test(Ring ring, std::size_t samples, std::uint64_t seed) {
  if (samples < 1000) throw std::invalid_argument("axiom five test needs at least 1000 samples");
  const auto purities = sample_purities(ring, samples, seed);
  AxiomFiveResult r;
  r.samples = samples;
  r.seed = seed;
  r.exponent = purity_exponent(ring);
  r.uniform = ks_outcome(purities, [](double d) { return std::clamp(d, 0.0, 1.0); });
  const double a = r.exponent;
  r.density = ks_outcome(purities, [a](double d) { return numerics::purity_cdf(d, a); });

  r.report = {"axiom_five_" + std::string(to_string(ring)), kKsThreshold, {}, {}};
  r.report.add({{}, r.uniform.scaled, r.uniform.passed, "sqrt(n) KS vs uniform"});
  r.report.note("density (1-d^2)^" + std::to_string(a) + ": sqrt(n) KS = " +
                std::to_string(r.density.scaled) + (r.density.passed ? " (pass)" : " (fail)"));
  r.report.note("seed " + std::to_string(seed) + ", " + std::to_string(samples) + " samples");
  return r;
}

EntropyTables compute_tables(std::size_t quadrature_nodes) {
  EntropyTables t;
  for (std::size_t k = 0; k < 3; ++k) {
    const Ring ring = EntropyTables::rings[k];
    // A pure state measured in its own frame has weights (1, 0).
    t.von_neumann[k] = von_neumann(MixedState({StateVector::basis(ring, 2, 0),
                                               StateVector::basis(ring, 2, 1)},
                                              {1.0, 0.0}));
    t.information[k] = info_entropy_qubit(ring, QuadratureSpec{quadrature_nodes});
    t.skeleton[k] = info_entropy_skeleton(rank_of(ring));
    t.difference[k] = t.information[k].value - t.skeleton[k];
  }
  return t;
}

}  // namespace qfound::entropy
