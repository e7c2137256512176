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

#include "numrad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "numrad/eigen_kernels.hpp"
#include "numrad/error.hpp"
#include "numrad/quadrature.hpp"

namespace numrad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Peak {
  double value;
  double arg;
  int evaluations;
};

void validate(double tol, const RadiusOptions& opts) {
  if (!(tol > 0.0)) throw DomainError("numerical radius: tol must be positive");
  if (opts.grid < 4) throw DomainError("numerical radius: grid needs at least 4 angles");
  if (!(opts.golden_width > 0.0)) throw DomainError("numerical radius: golden_width must be positive");
}

// Brent's method (parabolic steps with golden-section fallback) maximizing
// f on [lo, hi] until the bracket is narrower than `width`; returns the best
// point seen.
template <class F>
Peak local_max(F&& f, double lo, double hi, double width) {
  constexpr double kGold = 0.3819660112501051518;
  constexpr double kSqrtEps = 1.4901161193847656e-08;
  // Minimize -f.
  double x = lo + kGold * (hi - lo);
  double w = x, v = x;
  double fx = -f(x);
  double fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  int evals = 1;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double tol1 = kSqrtEps * std::abs(x) + width / 3.0;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - mid) <= tol2 - 0.5 * (hi - lo)) break;
    bool golden = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (lo - x) && p < q * (hi - x)) {
        d = p / q;
        const double u = x + d;
        if (u - lo < tol2 || hi - u < tol2) d = x < mid ? tol1 : -tol1;
        golden = false;
      }
    }
    if (golden) {
      e = (x < mid ? hi : lo) - x;
      d = kGold * e;
    }
    const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = -f(u);
    ++evals;
    if (fu <= fx) {
      if (u < x) hi = x; else lo = x;
      v = w, fv = fw;
      w = x, fw = fx;
      x = u, fx = fu;
    } else {
      if (u < x) lo = u; else hi = u;
      if (fu <= fw || w == x) {
        v = w, fv = fw;
        w = u, fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u, fv = fu;
      }
    }
  }
  return {-fx, x, evals};
}

// Polishes the maxima of a sampled periodic function. `grid[k]` holds
// f(k * period / K). `theta_spacing` is the grid step expressed as a rotation
// angle, which is what the cosine bound on the support function is stated in.
template <class F>
Peak refine_periodic(const std::vector<double>& grid, double period, double theta_spacing,
                     F&& f, const RadiusOptions& opts, double tol) {
  const std::size_t k_count = grid.size();
  const double step = period / static_cast<double>(k_count);

  std::size_t best_k = 0;
  for (std::size_t k = 1; k < k_count; ++k)
    if (grid[k] > grid[best_k]) best_k = k;
  Peak best{grid[best_k], step * static_cast<double>(best_k), 0};
  if (best.value <= 0.0) return best;

  const double cos_half = std::cos(0.5 * theta_spacing);
  const double floor_value = best.value * std::cos(theta_spacing);

  std::vector<std::size_t> candidates;
  for (std::size_t k = 0; k < k_count; ++k) {
    const double prev = grid[(k + k_count - 1) % k_count];
    const double next = grid[(k + 1) % k_count];
    if (grid[k] >= prev && grid[k] >= next && grid[k] >= floor_value) candidates.push_back(k);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](std::size_t a, std::size_t b) { return grid[a] > grid[b]; });
  if (candidates.size() > static_cast<std::size_t>(opts.max_refinements))
    candidates.resize(static_cast<std::size_t>(opts.max_refinements));

  for (std::size_t k : candidates) {
    // The sup near this grid point exceeds it by at most value (1/cos - 1).
    const double potential_gain = grid[k] * (1.0 / cos_half - 1.0);
    if (grid[k] + potential_gain <= best.value ||
        potential_gain <= tol * std::max(1.0, best.value) * 1e-3) {
      continue;
    }
    const double centre = step * static_cast<double>(k);
    Peak local = local_max(f, centre - step, centre + step, opts.golden_width);
    best.evaluations += local.evaluations;
    if (local.value > best.value) best = {local.value, local.arg, best.evaluations};
  }
  best.arg = std::fmod(best.arg, period);
  if (best.arg < 0.0) best.arg += period;
  return best;
}

// Holds Re A and Im A and evaluates the rotated Hermitian part
// cos(theta) Re A - sin(theta) Im A on demand.
class RotatedHermitian {
 public:
  explicit RotatedHermitian(const ComplexMatrix& a)
      : n_(a.dim()), re_(real_part(a)), im_(imag_part(a)), buf_(n_ * n_) {
    ws_.reserve(n_);
  }

  kernels::Extremes extremes(double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    auto re = re_.matrix().entries();
    auto im = im_.matrix().entries();
    for (std::size_t k = 0; k < buf_.size(); ++k) buf_[k] = c * re[k] - s * im[k];
    return kernels::tridiagonal_extremes(buf_, n_, ws_);
  }

 private:
  std::size_t n_;
  HermitianMatrix re_, im_;
  std::vector<Complex> buf_;
  kernels::Workspace ws_;
};

}  // namespace

double rotated_hermitian_max(const ComplexMatrix& a, double theta) {
  RotatedHermitian rot(a);
  return rot.extremes(theta).max;
}

RadiusResult numerical_radius(const ComplexMatrix& a, double tol, const RadiusOptions& opts) {
  validate(tol, opts);
  RotatedHermitian rot(a);
  const std::size_t k_count = static_cast<std::size_t>(opts.grid);
  const double step = kTwoPi / static_cast<double>(k_count);
  std::vector<double> grid(k_count);
  int evals = 0;
  if (k_count % 2 == 0) {
    // Re(e^{i(theta+pi)} A) = -Re(e^{i theta} A): one solve serves both angles.
    const std::size_t half = k_count / 2;
    for (std::size_t k = 0; k < half; ++k) {
      const kernels::Extremes ex = rot.extremes(step * static_cast<double>(k));
      grid[k] = ex.max;
      grid[k + half] = -ex.min;
      ++evals;
    }
  } else {
    for (std::size_t k = 0; k < k_count; ++k) {
      grid[k] = rot.extremes(step * static_cast<double>(k)).max;
      ++evals;
    }
  }
  const double grid_best = *std::max_element(grid.begin(), grid.end());

  auto g = [&rot](double theta) { return rot.extremes(theta).max; };
  const Peak peak = refine_periodic(grid, kTwoPi, step, g, opts, tol);

  RadiusResult r;
  // The sup over the circle is nonnegative: g(theta + pi) >= -g(theta).
  r.value = std::max(peak.value, 0.0);
  r.argmax_theta = peak.arg;
  r.evaluations = evals + peak.evaluations;
  r.upper_bound = std::max(grid_best, 0.0) / std::cos(0.5 * step);
  return r;
}

double omega_off_diag(const ComplexMatrix& x, const ComplexMatrix& y, double tol,
                      const RadiusOptions& opts) {
  if (x.dim() != y.dim()) {
    throw DimensionError("omega_off_diag: dimension mismatch (" + std::to_string(x.dim()) +
                         " vs " + std::to_string(y.dim()) + ")");
  }
  validate(tol, opts);
  const std::size_t n = x.dim();
  const ComplexMatrix ystar = adjoint(y);
  std::vector<Complex> z(n * n);
  kernels::Workspace ws;
  ws.reserve(n);
  auto xe = x.entries();
  auto ye = ystar.entries();
  // h(phi) = ||e^{i phi} X + Y*|| / 2 with phi = 2 theta.
  auto h = [&](double phi) {
    const Complex rot = std::polar(1.0, phi);
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = rot * xe[k] + ye[k];
    return 0.5 * std::sqrt(kernels::spectral_norm_sq(z, n, ws));
  };

  const std::size_t k_count = static_cast<std::size_t>(opts.grid);
  const double step = kTwoPi / static_cast<double>(k_count);
  std::vector<double> grid(k_count);
  for (std::size_t k = 0; k < k_count; ++k) grid[k] = h(step * static_cast<double>(k));
  const Peak peak = refine_periodic(grid, kTwoPi, 0.5 * step, h, opts, tol);
  return std::max(peak.value, 0.0);
}

LocalMax maximize_on_interval(const std::function<double(double)>& f, double lo, double hi,
                              double width) {
  if (!(hi > lo)) throw DomainError("maximize_on_interval: empty interval");
  if (!(width > 0.0)) throw DomainError("maximize_on_interval: width must be positive");
  const Peak p = local_max(f, lo, hi, width);
  return {p.value, p.arg, p.evaluations};
}

double scalar_integral_modulus(Complex a, Complex b) {
  const Complex d = b - a;
  const double alpha = std::norm(d);
  const double gamma = std::norm(a);
  if (alpha == 0.0) return std::abs(a);
  // |d| << |a|: the antiderivative's terms are ~|a|^2/|d| and cancel.
  if (alpha < 1e-4 * gamma) return scalar_integral_modulus_quadrature(a, b);

  const double beta = 2.0 * (std::conj(a) * d).real();
  const double cross = (std::conj(a) * d).imag();
  if (cross == 0.0) {
    // Collinear with the origin: |(1-t) a + t b| = |d| |t - t0|.
    const double t0 = -beta / (2.0 * alpha);
    double integral;
    if (t0 <= 0.0) {
      integral = 0.5 - t0;
    } else if (t0 >= 1.0) {
      integral = t0 - 0.5;
    } else {
      integral = 0.5 * (t0 * t0 + (1.0 - t0) * (1.0 - t0));
    }
    return std::sqrt(alpha) * integral;
  }
  // Antiderivative of sqrt(alpha t^2 + beta t + gamma) with discriminant
  // disc = 4 alpha gamma - beta^2 = 4 cross^2 > 0.
  const double disc = 4.0 * cross * cross;
  const double root_disc = 2.0 * std::abs(cross);
  const double coeff = disc / (8.0 * alpha * std::sqrt(alpha));
  auto antiderivative = [&](double t, double modulus) {
    const double u = 2.0 * alpha * t + beta;
    return u / (4.0 * alpha) * modulus + coeff * std::asinh(u / root_disc);
  };
  return antiderivative(1.0, std::abs(b)) - antiderivative(0.0, std::abs(a));
}

double scalar_integral_modulus_quadrature(Complex a, Complex b) {
  const Complex d = b - a;
  const double alpha = std::norm(d);
  if (alpha == 0.0) return std::abs(a);
  // t0 is the point of the line closest to 0 and h the distance of the line
  // to 0 in units of |b - a|; the integrand is analytic off t0 +- i h.
  // Panels grow geometrically away from t0 so each stays clear of them.
  const double t0 = -(std::conj(a) * d).real() / alpha;
  const double h = std::abs((std::conj(a) * d).imag()) / alpha;
  std::vector<double> cuts{0.0, 1.0};
  const double outside = t0 < 0.0 ? -t0 : (t0 > 1.0 ? t0 - 1.0 : 0.0);
  if (outside == 0.0) cuts.push_back(t0);
  const double reach = 1.0 + outside;
  for (double r = std::max(h, outside); r > 0.0 && r < reach; r *= 4.0) {
    for (double t : {t0 - r, t0 + r})
      if (t > 0.0 && t < 1.0) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  static const QuadratureRule rule = gauss_legendre_rule(16);
  std::vector<double> panels;
  std::vector<double> terms(rule.gl_nodes.size());
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k], hi = cuts[k + 1];
    if (!(hi > lo)) continue;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const double t = lo + (hi - lo) * rule.gl_nodes[i];
      terms[i] = rule.gl_weights[i] * std::abs((1.0 - t) * a + t * b);
    }
    panels.push_back((hi - lo) * pairwise_sum(terms));
  }
  return pairwise_sum(panels);
}

}  // namespace numrad
