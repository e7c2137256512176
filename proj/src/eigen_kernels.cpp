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

#include "numrad/eigen_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace numrad::kernels {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSafeMin = std::numeric_limits<double>::min();

// Sturm sequence of T - x I for the symmetric tridiagonal (d, e). Returns the
// number of eigenvalues below x and, through `logdet_slope`, the derivative
// of log|det(T - x I)|, which equals the sum over eigenvalues of 1/(x - lambda).
int sturm(const double* d, const double* e2, std::size_t n, double x, double pivmin,
          double& logdet_slope) {
  int count = 0;
  double q = d[0] - x;
  double dq = -1.0;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0) ++count;
  double slope = dq / q;
  for (std::size_t i = 1; i < n; ++i) {
    const double ratio = e2[i - 1] / q;
    dq = -1.0 + ratio * dq / q;
    q = d[i] - x - ratio;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
    slope += dq / q;
  }
  logdet_slope = slope;
  return count;
}

// Extreme eigenvalue by Newton on det(T - x I) started outside the spectrum.
// For a polynomial with real roots the iterates approach the outermost root
// monotonically from outside; the Sturm count guards the invariant and
// bisection takes over whenever a step is unusable.
double outer_eigenvalue(const double* d, const double* e2, std::size_t n, double lo,
                        double hi, bool upper, double width, double pivmin) {
  const int total = static_cast<int>(n);
  // Bracket: for the top eigenvalue, count(lo) < n and count(hi) == n;
  // for the bottom one, count(lo) == 0 and count(hi) >= 1.
  double x = upper ? hi : lo;
  for (int it = 0; it < 200 && hi - lo > width; ++it) {
    double slope = 0.0;
    const int c = sturm(d, e2, n, x, pivmin, slope);
    const bool outside = upper ? (c == total) : (c == 0);
    if (outside) {
      if (upper) hi = x; else lo = x;
      const double step = 1.0 / slope;
      const double next = x - step;
      if (std::isfinite(next) && next > lo && next < hi) {
        if (std::abs(step) <= width) return next;
        x = next;
        continue;
      }
    } else {
      if (upper) lo = x; else hi = x;
    }
    x = 0.5 * (lo + hi);
  }
  return 0.5 * (lo + hi);
}

Extremes symmetric_tridiagonal_extremes(const double* d, const double* e2, std::size_t n) {
  if (n == 1) return {d[0], d[0]};

  double max_e2 = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) max_e2 = std::max(max_e2, e2[i]);
  const double pivmin = kSafeMin * std::max(1.0, max_e2);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::sqrt(e2[i - 1]);
    if (i + 1 < n) radius += std::sqrt(e2[i]);
    lo = std::min(lo, d[i] - radius);
    hi = std::max(hi, d[i] + radius);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));
  if (scale == 0.0) return {0.0, 0.0};
  const double pad = 4.0 * kEps * scale * static_cast<double>(n) + pivmin;
  lo -= pad;
  hi += pad;
  const double width = 2.0 * kEps * scale;
  return {outer_eigenvalue(d, e2, n, lo, hi, false, width, pivmin),
          outer_eigenvalue(d, e2, n, lo, hi, true, width, pivmin)};
}

// Householder reduction of the Hermitian matrix whose lower triangle sits in
// ws.re / ws.im (row stride n) to real symmetric tridiagonal form; fills
// ws.diag and ws.offdiag_sq (squared moduli of the subdiagonal).
void tridiagonalize(std::size_t n, Workspace& ws) {
  double* d = ws.diag.data();
  double* e2 = ws.offdiag_sq.data();
  double* br = ws.re.data();
  double* bi = ws.im.data();
  double* vr = ws.vr.data();
  double* vi = ws.vi.data();
  double* pr = ws.pr.data();
  double* pi = ws.pi.data();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t r = k + 1;
    const std::size_t m = n - r;
    double sigma = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
      const double xr = br[(r + i) * n + k], xi = bi[(r + i) * n + k];
      sigma += xr * xr + xi * xi;
    }
    const double x0r = br[r * n + k], x0i = bi[r * n + k];
    const double x0sq = x0r * x0r + x0i * x0i;
    if (sigma == 0.0) {
      e2[k] = x0sq;
      continue;
    }
    const double xnorm = std::sqrt(x0sq + sigma);
    const double ax0 = std::sqrt(x0sq);
    const double phr = ax0 > 0.0 ? x0r / ax0 : 1.0;
    const double phi = ax0 > 0.0 ? x0i / ax0 : 0.0;
    // v = x - beta e1 with beta = -phase * ||x||.
    vr[0] = x0r + phr * xnorm;
    vi[0] = x0i + phi * xnorm;
    for (std::size_t i = 1; i < m; ++i) {
      vr[i] = br[(r + i) * n + k];
      vi[i] = bi[(r + i) * n + k];
    }
    const double tau = 2.0 / (vr[0] * vr[0] + vi[0] * vi[0] + sigma);

    // p = B v from the lower triangle of the trailing block.
    for (std::size_t i = 0; i < m; ++i) pr[i] = pi[i] = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double* rowr = br + (r + i) * n + r;
      const double* rowi = bi + (r + i) * n + r;
      const double wr = vr[i], wi = vi[i];
      double accr = rowr[i] * wr, acci = rowr[i] * wi;
      for (std::size_t j = 0; j < i; ++j) {
        accr += rowr[j] * vr[j] - rowi[j] * vi[j];
        acci += rowr[j] * vi[j] + rowi[j] * vr[j];
        // conj(B_ij) v_i feeds row j.
        pr[j] += rowr[j] * wr + rowi[j] * wi;
        pi[j] += rowr[j] * wi - rowi[j] * wr;
      }
      pr[i] += accr;
      pi[i] += acci;
    }
    double vp = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      pr[i] *= tau;
      pi[i] *= tau;
      vp += vr[i] * pr[i] + vi[i] * pi[i];
    }
    // w = p - (tau/2)(v* p) v; B <- B - v w* - w v*.
    const double kk = 0.5 * tau * vp;
    for (std::size_t i = 0; i < m; ++i) {
      pr[i] -= kk * vr[i];
      pi[i] -= kk * vi[i];
    }
    for (std::size_t i = 0; i < m; ++i) {
      double* rowr = br + (r + i) * n + r;
      double* rowi = bi + (r + i) * n + r;
      const double ar = vr[i], ai = vi[i], cr = pr[i], ci = pi[i];
      for (std::size_t j = 0; j <= i; ++j) {
        // v_i conj(w_j) + w_i conj(v_j)
        rowr[j] -= ar * pr[j] + ai * pi[j] + cr * vr[j] + ci * vi[j];
        rowi[j] -= ai * pr[j] - ar * pi[j] + ci * vr[j] - cr * vi[j];
      }
    }
    e2[k] = xnorm * xnorm;
  }
  {
    const double xr = br[(n - 1) * n + (n - 2)], xi = bi[(n - 1) * n + (n - 2)];
    e2[n - 2] = xr * xr + xi * xi;
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = br[i * n + i];
}

}  // namespace

void Workspace::reserve(std::size_t n) {
  if (re.size() < n * n) {
    re.resize(n * n);
    im.resize(n * n);
    zr.resize(n * n);
    zi.resize(n * n);
  }
  if (vr.size() < n) {
    for (auto* v : {&vr, &vi, &pr, &pi, &diag, &offdiag_sq}) v->resize(n);
  }
}

Extremes tridiagonal_extremes(std::span<const double> diag,
                              std::span<const double> offdiag_sq) {
  return symmetric_tridiagonal_extremes(diag.data(), offdiag_sq.data(), diag.size());
}

Extremes tridiagonal_extremes(std::span<Complex> h, std::size_t n, Workspace& ws) {
  if (n == 1) return {h[0].real(), h[0].real()};
  ws.reserve(n);
  double* br = ws.re.data();
  double* bi = ws.im.data();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      br[i * n + j] = h[i * n + j].real();
      bi[i * n + j] = h[i * n + j].imag();
    }
  }
  tridiagonalize(n, ws);
  return symmetric_tridiagonal_extremes(ws.diag.data(), ws.offdiag_sq.data(), n);
}

double spectral_norm_sq(std::span<const Complex> z, std::size_t n, Workspace& ws) {
  ws.reserve(n);
  double* zr = ws.zr.data();
  double* zi = ws.zi.data();
  for (std::size_t k = 0; k < n * n; ++k) {
    zr[k] = z[k].real();
    zi[k] = z[k].imag();
  }
  // Lower triangle of Z* Z: G_ij = sum_k conj(z_ki) z_kj, j <= i.
  double* gr = ws.re.data();
  double* gi = ws.im.data();
  std::fill(gr, gr + n * n, 0.0);
  std::fill(gi, gi + n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double* rr = zr + k * n;
    const double* ri = zi + k * n;
    for (std::size_t i = 0; i < n; ++i) {
      const double ar = rr[i], ai = ri[i];
      double* rowr = gr + i * n;
      double* rowi = gi + i * n;
      for (std::size_t j = 0; j <= i; ++j) {
        rowr[j] += ar * rr[j] + ai * ri[j];
        rowi[j] += ar * ri[j] - ai * rr[j];
      }
    }
  }
  if (n == 1) return gr[0];
  tridiagonalize(n, ws);
  const Extremes ex = symmetric_tridiagonal_extremes(ws.diag.data(), ws.offdiag_sq.data(), n);
  return std::max(ex.max, 0.0);
}

bool jacobi_extremes(std::span<const Complex> h, std::size_t n, double threshold,
                     int max_sweeps, Extremes& out) {
  std::vector<Complex> a(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(n * n));
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };

  auto finish = [&] {
    double lo = at(0, 0).real(), hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, at(i, i).real());
      hi = std::max(hi, at(i, i).real());
    }
    out = {lo, hi};
  };

  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += std::norm(at(i, j));
    if (std::sqrt(off) <= threshold) {
      finish();
      return true;
    }
    if (sweep == max_sweeps) break;

    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = at(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        // Below rounding level of both diagonal entries: annihilate.
        if (sweep > 2 && std::abs(app) + 100.0 * b == std::abs(app) &&
            std::abs(aqq) + 100.0 * b == std::abs(aqq)) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        rotated = true;
        const Complex phase = apq / b;  // e^{i phi}
        const double tau = (aqq - app) / (2.0 * b);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sc = s * std::conj(phase);  // s e^{-i phi}
        const Complex cc = c * std::conj(phase);  // c e^{-i phi}
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hkp = at(k, p), hkq = at(k, q);
          at(k, p) = c * hkp - sc * hkq;
          at(k, q) = s * hkp + cc * hkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hpk = at(p, k), hqk = at(q, k);
          at(p, k) = c * hpk - std::conj(sc) * hqk;
          at(q, k) = s * hpk + std::conj(cc) * hqk;
        }
        at(p, p) = app - t * b;
        at(q, q) = aqq + t * b;
        at(p, q) = at(q, p) = 0.0;
      }
    }
    if (!rotated) {
      finish();
      return true;
    }
  }
  return false;
}

}  // namespace numrad::kernels
