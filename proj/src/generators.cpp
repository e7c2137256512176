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

#include "numrad/generators.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "numrad/eigen_kernels.hpp"
#include "numrad/error.hpp"

namespace numrad {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kStreamKey = 0xd1b54a32d192ed03ULL;

// Streams used by generate().
constexpr std::uint64_t kMainStream = 0;
constexpr std::uint64_t kSecondStream = 1;
constexpr std::uint64_t kUnitaryStream = 2;
constexpr std::uint64_t kScaleStream = 3;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return mix64(mix64(seed ^ (stream * kStreamKey)) + counter * kGolden);
}

double to_unit(std::uint64_t x) {
  return (static_cast<double>(x >> 11) + 1.0) * 0x1.0p-53;
}

ComplexMatrix ginibre(std::size_t n, std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t offset = 0) {
  ComplexMatrix g(n);
  auto e = g.entries();
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = gaussian_draw(seed, stream, offset + k);
  return g;
}

double spectral_norm(const ComplexMatrix& a) {
  kernels::Workspace ws;
  return std::sqrt(kernels::spectral_norm_sq(a.entries(), a.dim(), ws));
}

ComplexMatrix square_zero(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  if (spec.nilpotent_block) {
    // U [[O, B], [O, O]] U* with B of size p x (n - p).
    const std::size_t p = n / 2;
    ComplexMatrix core(n);
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = p; j < n; ++j) core(i, j) = gaussian_draw(spec.seed, kMainStream, k++);
    const ComplexMatrix u = haar_unitary(n, spec.seed, kUnitaryStream);
    return u * core * adjoint(u);
  }
  std::vector<Complex> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = gaussian_draw(spec.seed, kMainStream, i);
    y[i] = gaussian_draw(spec.seed, kSecondStream, i);
  }
  // Project y off x so that y* x = 0, then A = x y* squares to zero.
  Complex xy = 0.0;
  double xx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xy += std::conj(x[i]) * y[i];
    xx += std::norm(x[i]);
  }
  const Complex coeff = xy / xx;
  for (std::size_t i = 0; i < n; ++i) y[i] -= coeff * x[i];
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = x[i] * std::conj(y[j]);
  return a;
}

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::general: return "general";
    case Family::hermitian: return "hermitian";
    case Family::skew_hermitian: return "skew_hermitian";
    case Family::normal: return "normal";
    case Family::unitary: return "unitary";
    case Family::nilpotent_square_zero: return "nilpotent_square_zero";
    case Family::rank_one: return "rank_one";
    case Family::scalar: return "scalar";
  }
  return "general";
}

std::optional<Family> parse_family(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Family>, 9> kNames{{
      {"general", Family::general},
      {"hermitian", Family::hermitian},
      {"skew_hermitian", Family::skew_hermitian},
      {"normal", Family::normal},
      {"unitary", Family::unitary},
      {"nilpotent_square_zero", Family::nilpotent_square_zero},
      {"nilpotent", Family::nilpotent_square_zero},
      {"rank_one", Family::rank_one},
      {"scalar", Family::scalar},
  }};
  for (const auto& [key, fam] : kNames)
    if (key == name) return fam;
  return std::nullopt;
}

Complex gaussian_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  const double u1 = to_unit(draw(seed, stream, 2 * index));
  const double u2 = to_unit(draw(seed, stream, 2 * index + 1));
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phase = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phase), r * std::sin(phase)};
}

double uniform_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return to_unit(draw(seed, stream, index));
}

ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
  ComplexMatrix r = ginibre(n, seed, stream);
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<Complex> v(n);
  std::vector<Complex> diag_phase(n, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    double xnorm_sq = 0.0;
    for (std::size_t i = k; i < n; ++i) xnorm_sq += std::norm(r(i, k));
    const double xnorm = std::sqrt(xnorm_sq);
    const Complex x0 = r(k, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    if (k + 1 == n || xnorm == 0.0) {
      diag_phase[k] = phase;
      continue;
    }
    // H = I - 2 v v* / (v* v) maps x to alpha e1 with alpha = -phase ||x||.
    const Complex alpha = -phase * xnorm;
    double vnorm_sq = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      v[i] = r(i, k);
      if (i == k) v[i] -= alpha;
      vnorm_sq += std::norm(v[i]);
    }
    const double tau = 2.0 / vnorm_sq;
    for (std::size_t j = k; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t i = k; i < n; ++i) s += std::conj(v[i]) * r(i, j);
      s *= tau;
      for (std::size_t i = k; i < n; ++i) r(i, j) -= s * v[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = k; j < n; ++j) s += q(i, j) * v[j];
      s *= tau;
      for (std::size_t j = k; j < n; ++j) q(i, j) -= s * std::conj(v[j]);
    }
    diag_phase[k] = -phase;  // R_kk = alpha, whose phase is -phase
  }
  // Q diag(R_kk / |R_kk|) is Haar distributed.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) *= diag_phase[j];
  return q;
}

ComplexMatrix generate(const FamilySpec& spec) {
  if (spec.n == 0) throw DomainError("generate: n must be positive");
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) {
    throw DomainError("generate: scale must be positive and finite");
  }
  if (spec.family == Family::nilpotent_square_zero && spec.n < 2) {
    throw DomainError("generate: nilpotent_square_zero needs n >= 2");
  }
  const std::size_t n = spec.n;
  ComplexMatrix a(n);
  switch (spec.family) {
    case Family::general:
      a = ginibre(n, spec.seed, kMainStream);
      break;
    case Family::hermitian:
      a = real_part(ginibre(n, spec.seed, kMainStream)).matrix();
      break;
    case Family::skew_hermitian:
      a = Complex(0.0, 1.0) * imag_part(ginibre(n, spec.seed, kMainStream)).matrix();
      break;
    case Family::normal: {
      const ComplexMatrix u = haar_unitary(n, spec.seed, kUnitaryStream);
      std::vector<Complex> lambda(n);
      for (std::size_t i = 0; i < n; ++i) lambda[i] = gaussian_draw(spec.seed, kMainStream, i);
      a = u * ComplexMatrix::diagonal(lambda) * adjoint(u);
      break;
    }
    case Family::unitary:
      return haar_unitary(n, spec.seed, kUnitaryStream);
    case Family::nilpotent_square_zero:
      a = square_zero(spec);
      break;
    case Family::rank_one: {
      for (std::size_t i = 0; i < n; ++i) {
        const Complex xi = gaussian_draw(spec.seed, kMainStream, i);
        for (std::size_t j = 0; j < n; ++j)
          a(i, j) = xi * std::conj(gaussian_draw(spec.seed, kSecondStream, j));
      }
      break;
    }
    case Family::scalar: {
      const Complex c = gaussian_draw(spec.seed, kMainStream, 0);
      for (std::size_t i = 0; i < n; ++i) a(i, i) = c;
      break;
    }
  }
  const double norm = spectral_norm(a);
  if (norm == 0.0) return a;
  const double target = spec.scale * std::exp2(2.0 * uniform_draw(spec.seed, kScaleStream, 0) - 1.0);
  return Complex(target / norm) * a;
}

double family_residual(const ComplexMatrix& a, Family family) {
  const std::size_t n = a.dim();
  const double fa = frobenius_norm(a);
  switch (family) {
    case Family::general:
      return 0.0;
    case Family::hermitian:
      return ratio(frobenius_norm(a - adjoint(a)), fa);
    case Family::skew_hermitian:
      return ratio(frobenius_norm(a + adjoint(a)), fa);
    case Family::normal: {
      const ComplexMatrix as = adjoint(a);
      return ratio(frobenius_norm(as * a - a * as), fa * fa);
    }
    case Family::unitary:
      return frobenius_norm(adjoint(a) * a - ComplexMatrix::identity(n)) /
             std::sqrt(static_cast<double>(n));
    case Family::nilpotent_square_zero:
      return ratio(frobenius_norm(a * a), fa * fa);
    case Family::rank_one: {
      std::size_t p = 0, q = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (std::abs(a(i, j)) > std::abs(a(p, q))) p = i, q = j;
      if (fa == 0.0) return 0.0;
      const Complex pivot = a(p, q);
      ComplexMatrix rest(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rest(i, j) = a(i, j) - a(i, q) * a(p, j) / pivot;
      return frobenius_norm(rest) / fa;
    }
    case Family::scalar: {
      Complex trace = 0.0;
      for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
      const Complex mean = trace / static_cast<double>(n);
      return ratio(frobenius_norm(a - mean * ComplexMatrix::identity(n)), fa);
    }
  }
  return 0.0;
}

}  // namespace numrad
