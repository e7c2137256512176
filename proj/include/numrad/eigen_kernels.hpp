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

// Allocation-free eigenvalue kernels on raw row-major buffers. These sit
// under the public linalg API and inside the hot loops of the numerical
// radius sweep, where thousands of small Hermitian problems are solved.

#ifndef NUMRAD_EIGEN_KERNELS_HPP
#define NUMRAD_EIGEN_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace numrad::kernels {

using Complex = std::complex<double>;

/// Scratch space reused across calls; grows on demand.
struct Workspace {
  std::vector<double> re, im;  // lower triangle being reduced
  std::vector<double> zr, zi;  // split copy of a general input
  std::vector<double> vr, vi, pr, pi;
  std::vector<double> diag;
  std::vector<double> offdiag_sq;

  void reserve(std::size_t n);
};

struct Extremes {
  double min;
  double max;
};

/// Extreme eigenvalues of the real symmetric tridiagonal matrix with the
/// given diagonal and squared subdiagonal (offdiag_sq[i] couples i, i+1).
Extremes tridiagonal_extremes(std::span<const double> diag,
                              std::span<const double> offdiag_sq);

/// Reduces the Hermitian matrix in `h` (n x n, row-major, both triangles
/// valid) to real symmetric tridiagonal form in place and returns its
/// extreme eigenvalues (Newton on the characteristic polynomial, guarded
/// by Sturm counts). `h` is destroyed.
Extremes tridiagonal_extremes(std::span<Complex> h, std::size_t n, Workspace& ws);

/// Largest eigenvalue of Z* Z, i.e. the squared spectral norm of Z.
/// `z` is n x n row-major and left intact.
double spectral_norm_sq(std::span<const Complex> z, std::size_t n, Workspace& ws);

/// Cyclic Jacobi on a copy of `h`. `threshold` is the absolute off-diagonal
/// Frobenius level at which sweeping stops. Returns false when the sweep
/// cap is exhausted.
bool jacobi_extremes(std::span<const Complex> h, std::size_t n, double threshold,
                     int max_sweeps, Extremes& out);

}  // namespace numrad::kernels

#endif  // NUMRAD_EIGEN_KERNELS_HPP
