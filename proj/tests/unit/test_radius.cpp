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
#include <numbers>
#include <random>
#include <vector>

#include "numrad/error.hpp"
#include "numrad/generators.hpp"
#include "numrad/radius.hpp"
#include "support.hpp"

using namespace numrad;
using testing::random_matrix;

namespace {

const Complex I(0.0, 1.0);

double omega(const ComplexMatrix& a) { return numerical_radius(a, 1e-10).value; }

ComplexMatrix antidiag(Complex a, Complex b) { return ComplexMatrix::from_rows({{0.0, a}, {b, 0.0}}); }

}  // namespace

TEST_SUITE("radius") {

TEST_CASE("closed-form radii") {
  CHECK(omega(ComplexMatrix::identity(2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(omega(antidiag(1.0, 0.0)) - 0.5) <= 1e-12);
  CHECK(omega(ComplexMatrix(3)) == 0.0);
  const std::vector<Complex> d{1.0, I};
  CHECK(omega(ComplexMatrix::diagonal(d)) == doctest::Approx(1.0).epsilon(1e-12));
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int k = 0; k < 50; ++k) {
    const double a = u(rng), b = u(rng);
    CHECK(std::abs(omega(antidiag(a, b)) - 0.5 * (a + b)) <= 1e-9 * std::max(1.0, a + b));
  }
}

TEST_CASE("hermitian radius is the spectral radius") {
  std::mt19937_64 rng(32);
  for (std::size_t n = 1; n <= 12; ++n) {
    const HermitianMatrix h(random_matrix(n, rng));
    const auto ex = testing::oracle_eigen_extremes(testing::to_eigen(h.matrix()));
    const double rho = std::max(std::abs(ex.min), std::abs(ex.max));
    CHECK(std::abs(omega(h.matrix()) - rho) <= 1e-9 * rho);
  }
}

TEST_CASE("radius lies inside an independent angle-sweep bracket") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 7);
    const auto a = random_matrix(n, rng);
    const auto r = numerical_radius(a, 1e-10);
    const auto br = testing::oracle_omega(a, 4096);
    CHECK(r.value >= br.min - 1e-10 * br.max);
    CHECK(r.value <= br.max + 1e-10 * br.max);
    CHECK(r.upper_bound >= r.value);
    CHECK(r.argmax_theta >= 0.0);
    CHECK(r.argmax_theta < 2.0 * std::numbers::pi);
    CHECK(r.value >= rotated_hermitian_max(a, r.argmax_theta) - 1e-10);
    CHECK(r.evaluations > 0);
  }
}

TEST_CASE("sandwich, homogeneity, adjoint and unitary invariance") {
  std::mt19937_64 rng(34);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 9);
    const auto a = random_matrix(n, rng, 0.5 + trial % 4);
    const double w = omega(a);
    const double na = testing::oracle_norm(a);
    CHECK(w >= 0.5 * na - 1e-7);
    CHECK(w <= na + 1e-7);
    const Complex c(2.0 * g(rng), 2.0 * g(rng));
    CHECK(std::abs(omega(c * a) - std::abs(c) * w) <= 1e-7 * std::abs(c) * w);
    CHECK(std::abs(omega(adjoint(a)) - w) <= 1e-7 * w);
    const auto u = testing::random_unitary(n, rng);
    CHECK(std::abs(omega(adjoint(u) * a * u) - w) <= 1e-7 * w);
  }
}

TEST_CASE("normal matrices attain the norm and square-zero matrices halve it") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const auto a = generate({Family::normal, n, seed});
    CHECK(std::abs(omega(a) - testing::oracle_norm(a)) <= 1e-7);
    const auto z = generate({Family::nilpotent_square_zero, n, seed, 1.0, seed % 2 == 1});
    CHECK(std::abs(omega(z) - 0.5 * testing::oracle_norm(z)) <= 1e-7);
  }
}

TEST_CASE("refining the angle grid never lowers the value") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(5, rng);
    double previous = 0.0;
    for (int grid : {8, 16, 32, 64, 128, 256, 512, 1024}) {
      RadiusOptions opts;
      opts.grid = grid;
      const double v = numerical_radius(a, 1e-10, opts).value;
      CHECK(v >= previous - 1e-12 * v);
      previous = std::max(previous, v);
    }
  }
}

TEST_CASE("off-diagonal block radius") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const auto s = random_matrix(n, rng);
    const auto y = random_matrix(n, rng);
    const double ws = omega(s);
    CHECK(std::abs(omega_off_diag(s, s, 1e-10) - ws) <= 1e-8 * ws);
    CHECK(std::abs(omega_off_diag(s, -s, 1e-10) - ws) <= 1e-8 * ws);
    const double direct = omega(block_off_diagonal(s, y));
    CHECK(std::abs(omega_off_diag(s, y, 1e-10) - direct) <= 1e-8 * direct);
    CHECK(std::abs(omega_off_diag(s, adjoint(s), 1e-10) - testing::oracle_norm(s)) <= 1e-8 * ws);
  }
  CHECK(omega_off_diag(ComplexMatrix::from_rows({{2.0}}), ComplexMatrix::from_rows({{3.0}}), 1e-10) ==
        doctest::Approx(2.5).epsilon(1e-12));
  CHECK_THROWS_AS(omega_off_diag(ComplexMatrix(2), ComplexMatrix(3), 1e-10), DimensionError);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(numerical_radius(ComplexMatrix(2), 0.0), DomainError);
  RadiusOptions opts;
  opts.grid = 0;
  CHECK_THROWS_AS(numerical_radius(ComplexMatrix(2), 1e-9, opts), DomainError);
  CHECK_THROWS_AS(maximize_on_interval([](double x) { return x; }, 1.0, 1.0, 1e-6), DomainError);
  CHECK_THROWS_AS(maximize_on_interval([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("local maximizer") {
  const auto m = maximize_on_interval([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(m.arg - 0.3) <= 1e-8);
  const auto kink = maximize_on_interval([](double x) { return -std::abs(x - 0.7); }, 0.0, 1.0, 1e-10);
  // Stopping width 2 (width / 3 + sqrt(eps) |x|).
  CHECK(std::abs(kink.arg - 0.7) <= 2.0 * (1e-10 / 3.0 + 1.5e-8 * 0.7));
  CHECK(kink.evaluations > 0);
}

TEST_CASE("scalar modulus integral") {
  CHECK(scalar_integral_modulus(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(scalar_integral_modulus(1.0, -1.0) - 0.5) <= 1e-12);
  CHECK(scalar_integral_modulus(0.0, 0.0) == 0.0);

  // 10^6-point midpoint sum; the integrand is smooth here, error ~1e-13.
  auto riemann = [](Complex a, Complex b) {
    const int m = 1000000;
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
      const double t = (k + 0.5) / m;
      s += std::abs((1.0 - t) * a + t * b);
    }
    return s / m;
  };
  const double v = scalar_integral_modulus(1.0, I);
  CHECK(v >= std::sqrt(2.0) / 2.0);
  CHECK(v <= 1.0);
  CHECK(std::abs(v - riemann(1.0, I)) <= 1e-10);

  std::mt19937_64 rng(37);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const Complex a(g(rng), g(rng)), b(g(rng), g(rng));
    const double r = scalar_integral_modulus(a, b);
    CHECK(std::abs(a + b) <= 2.0 * r + 1e-14);
    CHECK(2.0 * r <= std::abs(a) + std::abs(b) + 1e-14);
    CHECK(std::abs(r - scalar_integral_modulus_quadrature(a, b)) <= 1e-12 * std::max(1.0, r));
    if (k < 5) CHECK(std::abs(r - riemann(a, b)) <= 1e-9);
  }
  // Collinear through the origin and nearly equal endpoints.
  CHECK(scalar_integral_modulus(2.0, -6.0) == doctest::Approx((4.0 + 36.0) / 16.0).epsilon(1e-13));
  const Complex a(0.3, 0.4);
  CHECK(scalar_integral_modulus(a, a + Complex(1e-13, 0.0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(scalar_integral_modulus_quadrature(a, a + Complex(0.0, 1e-9) * a) - 0.5) <= 1e-15);
  // Segment passing 1e-6 from the origin: both routes against the exact
  // split |t - 1/2| + tiny curvature, ~ 1/4 + O(c^2 log c).
  const Complex p(1.0, 1e-6), q(-1.0, 1e-6);
  CHECK(std::abs(scalar_integral_modulus(p, q) - scalar_integral_modulus_quadrature(p, q)) <= 1e-12);
}

}
