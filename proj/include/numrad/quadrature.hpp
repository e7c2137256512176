// Copyright 2026 The numrad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NUMRAD_QUADRATURE_HPP
#define NUMRAD_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

#include "numrad/linalg.hpp"
#include "numrad/radius.hpp"

namespace numrad {

/// Gauss-Legendre rule on [0,1] plus the panel count of the
/// midpoint/trapezoid brackets.
struct QuadratureRule {
  std::vector<double> gl_nodes;
  std::vector<double> gl_weights;
  int bracket_panels = 64;
};

/// Integral of a function over [0,1].
///
/// For a convex integrand the composite midpoint sum is a lower bound and the
/// composite trapezoid sum an upper bound (Hermite-Hadamard on each panel).
/// `value` is the Gauss-Legendre sum clamped into [lower, upper]; `gauss`
/// keeps the unclamped sum. The clamp only bites at kinks, where the bracket
/// is the sharper statement.
struct IntegralEstimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int n_evals = 0;
  double gauss = 0.0;
};

/// m-point rule, 1 <= m <= 512. Throws DomainError on a bad m and
/// ConvergenceError if Newton fails to settle a node.
QuadratureRule gauss_legendre_rule(int m, int bracket_panels = 64);

/// Fixed-order pairwise summation; the result does not depend on how the
/// summands were produced.
double pairwise_sum(std::span<const double> xs);

using Integrand = std::function<double(double)>;

/// Throws ConvergenceError on a non-finite integrand value.
IntegralEstimate integrate_convex(const Integrand& f, const QuadratureRule& rule);

/// Integral of omega((1-t) A + t B).
IntegralEstimate integrate_omega_path(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const QuadratureRule& rule, double tol,
                                      const RadiusOptions& opts = {});

/// Integral of ||(1-t) A + t B||.
IntegralEstimate integrate_norm_path(const ComplexMatrix& a, const ComplexMatrix& b,
                                     const QuadratureRule& rule, double tol);

}  // namespace numrad

#endif  // NUMRAD_QUADRATURE_HPP
