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

#ifndef NUMRAD_LINALG_HPP
#define NUMRAD_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace numrad {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Models a bounded operator on a
/// finite-dimensional Hilbert space. Entries are finite by construction;
/// the mutable accessor is for builders and is not re-validated.
class ComplexMatrix {
 public:
  /// n x n zero matrix. Throws DomainError if n == 0.
  explicit ComplexMatrix(std::size_t n);
  /// Takes ownership of n*n row-major entries; throws DomainError on a size
  /// mismatch or a non-finite entry.
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> d);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return n_; }

  Complex operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  std::span<const Complex> entries() const { return a_; }
  std::span<Complex> entries() { return a_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

/// Hermitian matrix with exact conjugate symmetry: entry (j,i) is the
/// conjugate of entry (i,j) bit for bit, and the diagonal is real.
class HermitianMatrix {
 public:
  /// Symmetrizes: stores (A + A*)/2, i.e. averages each entry with the
  /// conjugate of its mirror and drops the imaginary part of the diagonal.
  explicit HermitianMatrix(const ComplexMatrix& a);

  std::size_t dim() const { return m_.dim(); }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ComplexMatrix& matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

struct EigenExtremes {
  double min;
  double max;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a);
ComplexMatrix operator*(Complex c, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
/// Largest entrywise modulus difference.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
/// (A + A*)/2.
HermitianMatrix real_part(const ComplexMatrix& a);
/// (A - A*)/(2i).
HermitianMatrix imag_part(const ComplexMatrix& a);

/// Smallest and largest eigenvalue by cyclic Jacobi sweeps. Stops once the
/// off-diagonal Frobenius mass drops below tol * ||H||_F / sqrt(n) or a full
/// sweep makes no rotation; throws ConvergenceError after 100 sweeps.
EigenExtremes hermitian_eigen_extremes(const HermitianMatrix& h, double tol);

/// Same quantity by Householder tridiagonalization and guarded Newton.
/// Accurate to a few ulps of the spectral radius; this is the route the
/// numerical radius sweep uses.
EigenExtremes hermitian_eigen_extremes_tridiagonal(const HermitianMatrix& h);

/// sqrt(lambda_max(A* A)) through the Jacobi solver.
double operator_norm(const ComplexMatrix& a, double tol);

/// Spectral norm of a Hermitian matrix, max(|lambda_min|, |lambda_max|).
double operator_norm(const HermitianMatrix& h, double tol);

/// The 2n x 2n operator matrix [[O, X], [Y, O]].
ComplexMatrix block_off_diagonal(const ComplexMatrix& x, const ComplexMatrix& y);

/// (1 - t) A + t B for t in [0, 1].
ComplexMatrix convex_combination(const ComplexMatrix& a, const ComplexMatrix& b,
                                 double t);

/// alpha A + beta B without the [0,1] restriction; used for rotated paths.
ComplexMatrix linear_combination(Complex alpha, const ComplexMatrix& a,
                                 Complex beta, const ComplexMatrix& b);

}  // namespace numrad

#endif  // NUMRAD_LINALG_HPP
