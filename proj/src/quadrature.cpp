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

#include "numrad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "numrad/error.hpp"

namespace numrad {

QuadratureRule gauss_legendre_rule(int m, int bracket_panels) {
  if (m < 1 || m > 512) {
    throw DomainError("gauss_legendre_rule: m = " + std::to_string(m) + " outside [1, 512]");
  }
  if (bracket_panels < 1) throw DomainError("gauss_legendre_rule: bracket_panels must be positive");

  const std::size_t count = static_cast<std::size_t>(m);
  QuadratureRule rule;
  rule.gl_nodes.assign(count, 0.0);
  rule.gl_weights.assign(count, 0.0);
  rule.bracket_panels = bracket_panels;

  const std::size_t half = (count + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // Roots of P_m on [-1,1] in decreasing order; Tricomi's initial guess.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(m) + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      const double pm = m == 1 ? x : p1;
      const double pm1 = m == 1 ? 1.0 : p0;
      dp = static_cast<double>(m) * (x * pm - pm1) / (x * x - 1.0);
      const double dx = pm / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ConvergenceError("gauss_legendre_rule: Newton did not converge for m = " +
                             std::to_string(m));
    }
    // Recompute the derivative at the converged root for the weight.
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      const double pm = m == 1 ? x : p1;
      const double pm1 = m == 1 ? 1.0 : p0;
      dp = static_cast<double>(m) * (x * pm - pm1) / (x * x - 1.0);
    }
    const double w = 1.0 / ((1.0 - x * x) * dp * dp);  // 2/((1-x^2)P'^2), halved for [0,1]
    if (2 * i + 1 == count) {
      rule.gl_nodes[i] = 0.5;
      rule.gl_weights[i] = w;
    } else {
      rule.gl_nodes[i] = 0.5 * (1.0 - x);
      rule.gl_nodes[count - 1 - i] = 0.5 * (1.0 + x);
      rule.gl_weights[i] = w;
      rule.gl_weights[count - 1 - i] = w;
    }
  }
  return rule;
}

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t mid = xs.size() / 2;
  return pairwise_sum(xs.first(mid)) + pairwise_sum(xs.subspan(mid));
}

IntegralEstimate integrate_convex(const Integrand& f, const QuadratureRule& rule) {
  if (rule.gl_nodes.empty() || rule.gl_nodes.size() != rule.gl_weights.size()) {
    throw DomainError("integrate_convex: malformed quadrature rule");
  }
  if (rule.bracket_panels < 1) throw DomainError("integrate_convex: bracket_panels must be positive");

  auto eval = [&f](double t) {
    const double v = f(t);
    if (!std::isfinite(v)) {
      throw ConvergenceError("integrate_convex: non-finite integrand at t = " + std::to_string(t));
    }
    return v;
  };

  IntegralEstimate est;
  std::vector<double> terms(rule.gl_nodes.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = rule.gl_weights[i] * eval(rule.gl_nodes[i]);
  est.gauss = pairwise_sum(terms);

  const std::size_t panels = static_cast<std::size_t>(rule.bracket_panels);
  const double h = 1.0 / static_cast<double>(panels);
  std::vector<double> mids(panels);
  std::vector<double> ends(panels + 1);
  for (std::size_t j = 0; j <= panels; ++j) ends[j] = eval(static_cast<double>(j) * h);
  for (std::size_t j = 0; j < panels; ++j) mids[j] = eval((static_cast<double>(j) + 0.5) * h);
  ends.front() *= 0.5;
  ends.back() *= 0.5;
  est.lower = h * pairwise_sum(mids);
  est.upper = h * pairwise_sum(ends);

  est.value = est.gauss;
  if (est.lower <= est.upper) est.value = std::clamp(est.gauss, est.lower, est.upper);
  est.n_evals = static_cast<int>(terms.size() + 2 * panels + 1);
  return est;
}

IntegralEstimate integrate_omega_path(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const QuadratureRule& rule, double tol,
                                      const RadiusOptions& opts) {
  if (a.dim() != b.dim()) throw DimensionError("integrate_omega_path: dimension mismatch");
  return integrate_convex(
      [&](double t) { return numerical_radius(convex_combination(a, b, t), tol, opts).value; },
      rule);
}

IntegralEstimate integrate_norm_path(const ComplexMatrix& a, const ComplexMatrix& b,
                                     const QuadratureRule& rule, double tol) {
  if (a.dim() != b.dim()) throw DimensionError("integrate_norm_path: dimension mismatch");
  return integrate_convex([&](double t) { return operator_norm(convex_combination(a, b, t), tol); },
                          rule);
}

}  // namespace numrad
