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

#include "numrad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "numrad/eigen_kernels.hpp"
#include "numrad/error.hpp"

namespace numrad {

namespace {

constexpr int kMaxJacobiSweeps = 100;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw DomainError("ComplexMatrix: dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), a_(std::move(entries)) {
  if (n == 0) throw DomainError("ComplexMatrix: dimension must be positive");
  if (a_.size() != n * n) {
    throw DomainError("ComplexMatrix: expected " + std::to_string(n * n) +
                      " entries, got " + std::to_string(a_.size()));
  }
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (!std::isfinite(a_[k].real()) || !std::isfinite(a_[k].imag())) {
      throw DomainError("ComplexMatrix: non-finite entry at index " + std::to_string(k));
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionError("from_rows: matrix must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(entries));
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& a) : m_(a.dim()) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    m_(i, i) = Complex(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator+");
  ComplexMatrix r = a;
  auto out = r.entries();
  auto rhs = b.entries();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += rhs[k];
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator-");
  ComplexMatrix r = a;
  auto out = r.entries();
  auto rhs = b.entries();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= rhs[k];
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a) { return Complex(-1.0, 0.0) * a; }

ComplexMatrix operator*(Complex c, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  for (auto& x : r.entries()) x *= c;
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return m;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

HermitianMatrix real_part(const ComplexMatrix& a) { return HermitianMatrix(a); }

HermitianMatrix imag_part(const ComplexMatrix& a) {
  // Symmetrizing -iA gives (-iA + (-iA)*)/2 = (A - A*)/(2i).
  return HermitianMatrix(Complex(0.0, -1.0) * a);
}

EigenExtremes hermitian_eigen_extremes(const HermitianMatrix& h, double tol) {
  if (!(tol > 0.0)) throw DomainError("hermitian_eigen_extremes: tol must be positive");
  const std::size_t n = h.dim();
  const double fro = frobenius_norm(h.matrix());
  const double threshold = tol * fro / std::sqrt(static_cast<double>(n));
  kernels::Extremes ex{};
  if (!kernels::jacobi_extremes(h.matrix().entries(), n, threshold, kMaxJacobiSweeps, ex)) {
    throw ConvergenceError("hermitian_eigen_extremes: Jacobi did not converge within " +
                           std::to_string(kMaxJacobiSweeps) + " sweeps (n = " +
                           std::to_string(n) + ", ||H||_F = " + std::to_string(fro) + ")");
  }
  return {ex.min, ex.max};
}

EigenExtremes hermitian_eigen_extremes_tridiagonal(const HermitianMatrix& h) {
  std::vector<Complex> work(h.matrix().entries().begin(), h.matrix().entries().end());
  kernels::Workspace ws;
  const kernels::Extremes ex = kernels::tridiagonal_extremes(work, h.dim(), ws);
  return {ex.min, ex.max};
}

double operator_norm(const ComplexMatrix& a, double tol) {
  const HermitianMatrix gram(adjoint(a) * a);
  const EigenExtremes ex = hermitian_eigen_extremes(gram, tol);
  return std::sqrt(std::max(ex.max, 0.0));
}

double operator_norm(const HermitianMatrix& h, double tol) {
  const EigenExtremes ex = hermitian_eigen_extremes(h, tol);
  return std::max(std::abs(ex.min), std::abs(ex.max));
}

ComplexMatrix block_off_diagonal(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y, "block_off_diagonal");
  const std::size_t n = x.dim();
  ComplexMatrix r(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r(i, n + j) = x(i, j);
      r(n + i, j) = y(i, j);
    }
  }
  return r;
}

ComplexMatrix convex_combination(const ComplexMatrix& a, const ComplexMatrix& b, double t) {
  require_same_dim(a, b, "convex_combination");
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("convex_combination: t = " + std::to_string(t) + " is outside [0, 1]");
  }
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return linear_combination(1.0 - t, a, t, b);
}

ComplexMatrix linear_combination(Complex alpha, const ComplexMatrix& a, Complex beta,
                                 const ComplexMatrix& b) {
  require_same_dim(a, b, "linear_combination");
  ComplexMatrix r(a.dim());
  auto out = r.entries();
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = alpha * x[k] + beta * y[k];
  return r;
}

}  // namespace numrad
