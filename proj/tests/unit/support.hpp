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

// Independent oracles for the unit tests: Eigen decompositions and a
// std::mt19937_64 matrix source that shares nothing with the library's
// generators.

#ifndef NUMRAD_TESTS_SUPPORT_HPP
#define NUMRAD_TESTS_SUPPORT_HPP

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "numrad/linalg.hpp"

namespace testing {

using numrad::Complex;
using numrad::ComplexMatrix;

inline ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n);
  for (auto& z : m.entries()) z = scale * Complex(g(rng), g(rng));
  return m;
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return m;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix a(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return a;
}

inline double oracle_norm(const ComplexMatrix& a) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
  return svd.singularValues()(0);
}

struct Span {
  double min;
  double max;
};

inline Span oracle_eigen_extremes(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

/// Bracket on omega(A) from a K-angle sweep of Eigen's Hermitian solver:
/// the best grid value is a lower bound and, by the cosine bound on the
/// support function, best / cos(pi / K) an upper bound.
inline Span oracle_omega(const ComplexMatrix& a, int k = 2048) {
  const Eigen::MatrixXcd m = to_eigen(a);
  double best = 0.0;
  for (int j = 0; j < k; ++j) {
    const Complex rot = std::polar(1.0, 2.0 * std::numbers::pi * j / k);
    const Eigen::MatrixXcd h = 0.5 * (rot * m + (rot * m).adjoint());
    best = std::max(best, oracle_eigen_extremes(h).max);
  }
  return {best, best / std::cos(std::numbers::pi / k)};
}

inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(random_matrix(n, rng)));
  return from_eigen(qr.householderQ() * Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n),
                                                                   static_cast<Eigen::Index>(n)));
}

}  // namespace testing

#endif  // NUMRAD_TESTS_SUPPORT_HPP
