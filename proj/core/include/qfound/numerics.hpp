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
#include <functional>
#include <span>
#include <vector>

namespace qfound::numerics {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [a, b]. Nodes from Newton iteration on
/// P_n; exact for polynomials of degree 2n - 1.
QuadratureRule gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0);

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

/// Two-sided Kolmogorov-Smirnov statistic sup |F_n - F| of the samples
/// against a continuous CDF. Samples need not be sorted.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// CDF on [0, 1] of the density proportional to (1 - d^2)^exponent,
/// exponent > -1: I_{d^2}(1/2, exponent + 1).
double purity_cdf(double delta, double exponent);

}  // namespace qfound::numerics
