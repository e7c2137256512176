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

// One checker per inequality chain. Each checker computes every term once,
// stores it under a label, and builds its links from the stored values so
// that links sharing a term agree bit for bit.

#ifndef NUMRAD_INEQUALITIES_HPP
#define NUMRAD_INEQUALITIES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numrad/linalg.hpp"
#include "numrad/quadrature.hpp"
#include "numrad/radius.hpp"

namespace numrad {

struct ChainLink {
  std::string lhs_label;
  std::string rhs_label;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
};

struct CheckReport {
  std::string check_name;
  std::string inputs_digest;
  double tolerance = 0.0;
  bool passed = false;
  std::vector<ChainLink> links;
  std::map<std::string, double> terms;

  /// Smallest slack over the links (+inf without links).
  double worst_slack() const;
  /// Passed, but some link sits in [-tolerance, 0).
  bool marginal() const;
};

struct CheckOptions {
  /// Absolute tolerance on slacks.
  double tol = 1e-6;
  QuadratureRule rule = gauss_legendre_rule(64);
  RadiusOptions radius;
  /// Angles over [0, pi) for the sup-over-rotations checker.
  int theta_grid = 360;
  /// Golden-section width for polishing the best rotation.
  double theta_golden_width = 1e-6;
  /// Mixed into inputs_digest.
  std::uint64_t seed = 0;

  /// Tolerance handed to the radius engine and the norm solver.
  double omega_tol() const { return tol / 10.0; }
};

/// 16 hex digits: FNV-1a 64 over each operand's dimension and entry bits
/// (little-endian re, im), then the seed.
std::string inputs_digest(std::span<const ComplexMatrix* const> operands, std::uint64_t seed);

CheckReport check_scalar_seed(Complex a, Complex b, const CheckOptions& opts = {});
CheckReport check_triangle_refinement(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const CheckOptions& opts = {});
CheckReport check_realpart_refinement(const ComplexMatrix& a, const CheckOptions& opts = {});
CheckReport check_block_refinement(const ComplexMatrix& s, const ComplexMatrix& t,
                                   const CheckOptions& opts = {});
CheckReport check_offdiag_bound(const ComplexMatrix& a, const CheckOptions& opts = {});
/// Throws DomainError unless the normality residual is at most 1e-10.
CheckReport check_normal_identity(const ComplexMatrix& a, const CheckOptions& opts = {});
/// Throws DomainError when opts.theta_grid < 8.
CheckReport check_sup_theta_identity(const ComplexMatrix& a, const CheckOptions& opts = {});
CheckReport check_sym_skew_bound(const ComplexMatrix& a, const CheckOptions& opts = {});
CheckReport check_hermite_hadamard(const ComplexMatrix& a, const ComplexMatrix& b,
                                   const CheckOptions& opts = {});
CheckReport check_min_lemma(const ComplexMatrix& s, const ComplexMatrix& t,
                            const CheckOptions& opts = {});
CheckReport check_refined_sum(const ComplexMatrix& s, const ComplexMatrix& t,
                              const CheckOptions& opts = {});
/// The block at parameter t is [[O, X_t], [Y_t, O]] with
/// X_t = (1-t) Re A + i t Im A and Y_t = t Re A - i (1-t) Im A, the case
/// S = Re A, T = i Im A of check_refined_sum.
CheckReport check_lower_bound(const ComplexMatrix& a, const CheckOptions& opts = {});
/// Same block as check_lower_bound. Throws DomainError unless the
/// square-zero residual is at most 1e-10.
CheckReport check_nilpotent_equality(const ComplexMatrix& a, const CheckOptions& opts = {});

/// Residual threshold of the normality and square-zero gates.
inline constexpr double kGateThreshold = 1e-10;

enum class Arity { scalar_pair, single, pair };

struct CheckerInfo {
  std::string_view name;
  Arity arity;
  /// The first two links form lhs <= middle <= rhs.
  bool chain;
  /// Scalar pair checkers read the (0,0) entries of two operands.
  std::function<CheckReport(const ComplexMatrix&, const ComplexMatrix&, const CheckOptions&)> run;
};

/// All checkers in a fixed order.
std::span<const CheckerInfo> checker_registry();
const CheckerInfo* find_checker(std::string_view name);

}  // namespace numrad

#endif  // NUMRAD_INEQUALITIES_HPP
