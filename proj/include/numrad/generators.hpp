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

// Seeded random matrices for the hypothesis classes the checkers care about.
//
// Randomness comes from counter-based SplitMix64 streams: draw number c of
// stream s under seed x is mix64(mix64(x ^ (s * K)) + c * G), with mix64 the
// SplitMix64 finalizer, K = 0xd1b54a32d192ed03 and G = 0x9e3779b97f4a7c15.
// Complex normal number k of a stream uses draws 2k and 2k+1 through
// Box-Muller, with uniforms u = ((draw >> 11) + 1) * 2^-53 in (0, 1].
// Nothing depends on call order, so a matrix is a pure function of its spec.

#ifndef NUMRAD_GENERATORS_HPP
#define NUMRAD_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "numrad/linalg.hpp"

namespace numrad {

enum class Family {
  general,
  hermitian,
  skew_hermitian,
  normal,
  unitary,
  nilpotent_square_zero,
  rank_one,
  scalar,
};

std::string_view to_string(Family f);
/// Accepts the enum spellings plus "nilpotent" for nilpotent_square_zero.
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::general;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  /// Target spectral scale: the result has ||A|| in [scale/2, 2 scale].
  /// Unitary matrices keep norm 1 regardless.
  double scale = 1.0;
  /// Square-zero family only: U [[O, B], [O, O]] U* instead of x y*.
  bool nilpotent_block = false;
};

/// Deterministic in the spec. Throws DomainError on n == 0, a non-positive
/// or non-finite scale, or a square-zero request with n < 2.
ComplexMatrix generate(const FamilySpec& spec);

/// Relative Frobenius residual of the relation defining `family`:
///   hermitian  ||A - A*|| / ||A||        normal    ||A*A - AA*|| / ||A||^2
///   skew       ||A + A*|| / ||A||        unitary   ||A*A - I|| / sqrt(n)
///   square-0   ||A A|| / ||A||^2         scalar    ||A - (tr A / n) I|| / ||A||
///   rank_one   ||A - a_q a_p / a_pq|| / ||A|| with (p, q) the largest entry
/// General matrices give 0, and so does A = 0 for the homogeneous relations.
double family_residual(const ComplexMatrix& a, Family family);

/// Counter-based normal draws, exposed for the test suite.
Complex gaussian_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);
double uniform_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Haar-distributed unitary from the Householder QR of a Ginibre matrix
/// drawn from `stream`.
ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed, std::uint64_t stream);

}  // namespace numrad

#endif  // NUMRAD_GENERATORS_HPP
