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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "numrad/error.hpp"
#include "numrad/linalg.hpp"
#include "support.hpp"

using namespace numrad;
using testing::random_matrix;

namespace {
const Complex I(0.0, 1.0);
}

TEST_SUITE("linalg") {

TEST_CASE("construction validates shape and finiteness") {
  CHECK_THROWS_AS(ComplexMatrix(0), DomainError);
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), DomainError);
  std::vector<Complex> bad(4);
  bad[2] = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(ComplexMatrix(2, bad), DomainError);
  bad[2] = Complex(0.0, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(ComplexMatrix(2, bad), DomainError);
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("adjoint examples and involution") {
  CHECK(adjoint(ComplexMatrix::identity(2)) == ComplexMatrix::identity(2));
  const auto j2 = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  CHECK(adjoint(j2) == ComplexMatrix::from_rows({{0.0, 0.0}, {1.0, 0.0}}));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(5, rng);
    CHECK(adjoint(adjoint(a)) == a);
    CHECK(std::abs(operator_norm(adjoint(a), 1e-13) - operator_norm(a, 1e-13)) <= 1e-12 * operator_norm(a, 1e-13));
    CHECK(adjoint(a)(1, 3) == std::conj(a(3, 1)));
  }
}

TEST_CASE("real and imaginary parts") {
  const auto scalar_i = ComplexMatrix::from_rows({{I}});
  CHECK(real_part(scalar_i)(0, 0) == Complex(0.0));
  CHECK(imag_part(scalar_i)(0, 0) == Complex(1.0));

  const auto j2 = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const auto re = real_part(j2);
  CHECK(re(0, 1) == Complex(0.5));
  CHECK(re(1, 0) == Complex(0.5));
  const auto im = imag_part(j2);
  CHECK(im(0, 1).real() == doctest::Approx(0.0));
  CHECK(im(0, 1).imag() == doctest::Approx(-0.5));
  CHECK(im(1, 0).imag() == doctest::Approx(0.5));

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(4, rng);
    const auto rebuilt = real_part(a).matrix() + I * imag_part(a).matrix();
    CHECK(max_abs_diff(rebuilt, a) <= 1e-12);
    const auto h = real_part(a);
    CHECK(real_part(h.matrix()).matrix() == h.matrix());
  }
}

TEST_CASE("hermitian storage is exactly conjugate symmetric") {
  std::mt19937_64 rng(13);
  const auto a = random_matrix(7, rng);
  const HermitianMatrix h(a);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(h(i, i).imag() == 0.0);
    for (std::size_t j = 0; j < 7; ++j) CHECK(h(i, j) == std::conj(h(j, i)));
  }
}

TEST_CASE("eigen extremes on closed forms") {
  const std::vector<Complex> d{-3.0, 2.0, 5.0};
  const HermitianMatrix diag(ComplexMatrix::diagonal(d));
  auto ex = hermitian_eigen_extremes(diag, 1e-12);
  CHECK(ex.min == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(ex.max == doctest::Approx(5.0).epsilon(1e-14));
  auto tr = hermitian_eigen_extremes_tridiagonal(diag);
  CHECK(tr.min == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(tr.max == doctest::Approx(5.0).epsilon(1e-14));

  const HermitianMatrix half(ComplexMatrix::from_rows({{0.0, 0.5}, {0.5, 0.0}}));
  ex = hermitian_eigen_extremes(half, 1e-12);
  CHECK(ex.min == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(ex.max == doctest::Approx(0.5).epsilon(1e-14));

  const HermitianMatrix zero(ComplexMatrix(3));
  CHECK(hermitian_eigen_extremes(zero, 1e-12).max == 0.0);
  CHECK(hermitian_eigen_extremes_tridiagonal(zero).min == 0.0);
  CHECK_THROWS_AS(hermitian_eigen_extremes(zero, 0.0), DomainError);
}

TEST_CASE("random real diagonals give their extremes") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> d(1 + trial % 9);
    double lo = 1e300, hi = -1e300;
    for (auto& x : d) {
      x = u(rng);
      lo = std::min(lo, x.real());
      hi = std::max(hi, x.real());
    }
    const HermitianMatrix h(ComplexMatrix::diagonal(d));
    const double tol = 1e-12;
    const auto ex = hermitian_eigen_extremes(h, tol);
    CHECK(std::abs(ex.min - lo) <= tol * std::max(1.0, std::max(-lo, hi)));
    CHECK(std::abs(ex.max - hi) <= tol * std::max(1.0, std::max(-lo, hi)));
  }
}

TEST_CASE("largest eigenvalue dominates sampled Rayleigh quotients") {
  std::mt19937_64 rng(15);
  const HermitianMatrix h(random_matrix(6, rng));
  const double tol = 1e-10;
  const auto ex = hermitian_eigen_extremes(h, tol);
  std::normal_distribution<double> g(0.0, 1.0);
  double best = -1e300;
  std::vector<Complex> x(6), hx(6);
  for (int s = 0; s < 100000; ++s) {
    double nx = 0.0;
    for (auto& v : x) {
      v = Complex(g(rng), g(rng));
      nx += std::norm(v);
    }
    Complex q = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      Complex row = 0.0;
      for (std::size_t j = 0; j < 6; ++j) row += h(i, j) * x[j];
      q += std::conj(x[i]) * row;
    }
    best = std::max(best, q.real() / nx);
  }
  const double rho = std::max(std::abs(ex.min), std::abs(ex.max));
  CHECK(best <= ex.max + tol * std::max(1.0, rho));
  // 1e5 samples in C^6 come within a few percent of the top of the spectrum.
  CHECK(ex.max - best <= 0.1 * rho);
}

TEST_CASE("both eigen routes agree with Eigen") {
  std::mt19937_64 rng(16);
  for (std::size_t n = 1; n <= 24; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const HermitianMatrix h(random_matrix(n, rng, 1.0 + trial));
      const auto oracle = testing::oracle_eigen_extremes(testing::to_eigen(h.matrix()));
      const double rho = std::max(std::abs(oracle.min), std::abs(oracle.max));
      const double tol = 1e-10;
      const auto jac = hermitian_eigen_extremes(h, tol);
      CHECK(std::abs(jac.min - oracle.min) <= tol * std::max(1.0, rho));
      CHECK(std::abs(jac.max - oracle.max) <= tol * std::max(1.0, rho));
      const auto tri = hermitian_eigen_extremes_tridiagonal(h);
      CHECK(std::abs(tri.min - oracle.min) <= 1e-13 * std::max(1.0, rho));
      CHECK(std::abs(tri.max - oracle.max) <= 1e-13 * std::max(1.0, rho));
    }
  }
}

TEST_CASE("eigen routes on clustered and graded spectra") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 12;
    const auto u = testing::random_unitary(n, rng);
    std::vector<Complex> d(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Repeated top eigenvalue, a tight cluster, and a tiny tail.
      d[i] = i < 3 ? 2.0 : (i < 6 ? 1.0 + 1e-12 * static_cast<double>(i) : std::pow(10.0, -static_cast<double>(i)));
    }
    const HermitianMatrix h(u * ComplexMatrix::diagonal(d) * adjoint(u));
    const auto jac = hermitian_eigen_extremes(h, 1e-12);
    const auto tri = hermitian_eigen_extremes_tridiagonal(h);
    CHECK(jac.max == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(tri.max == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(tri.min - 1e-11) <= 1e-13);
    CHECK(std::abs(jac.min - 1e-11) <= 2e-12);
  }
}

TEST_CASE("operator norm examples") {
  CHECK(operator_norm(ComplexMatrix::identity(3), 1e-12) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(operator_norm(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}), 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-14));
  std::mt19937_64 rng(18);
  for (std::size_t n : {1u, 2u, 5u, 9u}) {
    const auto u = testing::random_unitary(n, rng);
    CHECK(operator_norm(u, 1e-12) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(operator_norm(ComplexMatrix(4), 1e-12) == 0.0);
}

TEST_CASE("operator norm against singular values") {
  std::mt19937_64 rng(19);
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto a = random_matrix(n, rng);
    const double oracle = testing::oracle_norm(a);
    CHECK(std::abs(operator_norm(a, 1e-12) - oracle) <= 1e-11 * oracle);
  }
}

TEST_CASE("operator norm is homogeneous and unitarily invariant") {
  std::mt19937_64 rng(20);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    const auto a = random_matrix(n, rng);
    const double na = operator_norm(a, 1e-12);
    const Complex c(3.0 * g(rng), 3.0 * g(rng));
    CHECK(std::abs(operator_norm(c * a, 1e-12) - std::abs(c) * na) <= 1e-9 * std::abs(c) * na);
    const auto u = testing::random_unitary(n, rng);
    CHECK(std::abs(operator_norm(adjoint(u) * a * u, 1e-12) - na) <= 1e-9 * na);
  }
}

TEST_CASE("block operator matrices") {
  CHECK(block_off_diagonal(ComplexMatrix(2), ComplexMatrix(2)) == ComplexMatrix(4));
  CHECK_THROWS_AS(block_off_diagonal(ComplexMatrix(2), ComplexMatrix(3)), DimensionError);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const auto x = random_matrix(n, rng);
    const auto y = random_matrix(n, rng, 0.5 + trial % 3);
    const auto blk = block_off_diagonal(x, y);
    CHECK(blk.dim() == 2 * n);
    CHECK(blk(0, n) == x(0, 0));
    CHECK(blk(n, 0) == y(0, 0));
    CHECK(blk(0, 0) == Complex(0.0));
    const double nx = testing::oracle_norm(x), ny = testing::oracle_norm(y);
    CHECK(std::abs(operator_norm(blk, 1e-12) - std::max(nx, ny)) <= 1e-9 * std::max(nx, ny));
    CHECK(std::abs(operator_norm(block_off_diagonal(x, adjoint(x)), 1e-12) - nx) <= 1e-9 * nx);
    CHECK(std::abs(testing::oracle_norm(block_off_diagonal(x, adjoint(x))) - nx) <= 1e-12 * nx);
  }
}

TEST_CASE("convex combinations") {
  std::mt19937_64 rng(22);
  const auto a = random_matrix(3, rng), b = random_matrix(3, rng);
  CHECK(convex_combination(a, b, 0.0) == a);
  CHECK(convex_combination(a, b, 1.0) == b);
  const auto id = ComplexMatrix::identity(2);
  CHECK(convex_combination(id, -id, 0.5) == ComplexMatrix(2));
  const auto j2 = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const auto c = convex_combination(j2, adjoint(j2), 0.3);
  CHECK(c(0, 1).real() == doctest::Approx(0.7));
  CHECK(c(1, 0).real() == doctest::Approx(0.3));
  CHECK(c(0, 0) == Complex(0.0));
  CHECK_THROWS_AS(convex_combination(a, b, -0.1), DomainError);
  CHECK_THROWS_AS(convex_combination(a, b, 1.5), DomainError);
  CHECK_THROWS_AS(convex_combination(a, ComplexMatrix(2), 0.5), DimensionError);
}

TEST_CASE("arithmetic dimension checks") {
  CHECK_THROWS_AS(ComplexMatrix(2) + ComplexMatrix(3), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2) * ComplexMatrix(3), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2) - ComplexMatrix(3), DimensionError);
}

}
