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

#include "numrad/inequalities.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "numrad/error.hpp"
#include "numrad/generators.hpp"

namespace numrad {

namespace {

constexpr double kNormTol = 1e-12;

class ReportBuilder {
 public:
  ReportBuilder(std::string_view name, std::string digest, double tol) {
    r_.check_name = std::string(name);
    r_.inputs_digest = std::move(digest);
    r_.tolerance = tol;
  }

  double term(const std::string& label, double value) {
    r_.terms[label] = value;
    return value;
  }

  // Stores factor * value under `label` and the raw bracket beside it.
  double integral(const std::string& label, const IntegralEstimate& est, double factor = 1.0) {
    r_.terms[label + " [lower]"] = factor * est.lower;
    r_.terms[label + " [upper]"] = factor * est.upper;
    return term(label, factor * est.value);
  }

  void link(const std::string& lhs, const std::string& rhs) {
    ChainLink l;
    l.lhs_label = lhs;
    l.rhs_label = rhs;
    l.lhs = r_.terms.at(lhs);
    l.rhs = r_.terms.at(rhs);
    l.slack = l.rhs - l.lhs;
    r_.links.push_back(std::move(l));
  }

  CheckReport finish() {
    r_.passed = std::all_of(r_.links.begin(), r_.links.end(),
                            [&](const ChainLink& l) { return l.slack >= -r_.tolerance; });
    return std::move(r_);
  }

 private:
  CheckReport r_;
};

std::string digest_of(std::initializer_list<const ComplexMatrix*> ops, std::uint64_t seed) {
  return inputs_digest(std::span<const ComplexMatrix* const>(ops.begin(), ops.size()), seed);
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, std::string_view who) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(who) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

double omega(const ComplexMatrix& a, const CheckOptions& o) {
  return numerical_radius(a, o.omega_tol(), o.radius).value;
}

double norm(const ComplexMatrix& a) { return operator_norm(a, kNormTol); }

double norm(const HermitianMatrix& h) { return operator_norm(h, kNormTol); }

IntegralEstimate omega_path(const ComplexMatrix& a, const ComplexMatrix& b, const CheckOptions& o) {
  return integrate_omega_path(a, b, o.rule, o.omega_tol(), o.radius);
}

IntegralEstimate norm_path(const ComplexMatrix& a, const ComplexMatrix& b, const CheckOptions& o) {
  return integrate_norm_path(a, b, o.rule, kNormTol);
}

// Integral of omega([[O, (1-t) S + t T], [t S* + (1-t) T*, O]]).
IntegralEstimate block_path(const ComplexMatrix& s, const ComplexMatrix& t, const CheckOptions& o) {
  const ComplexMatrix ss = adjoint(s);
  const ComplexMatrix ts = adjoint(t);
  return integrate_convex(
      [&](double x) {
        return omega_off_diag(convex_combination(s, t, x), linear_combination(x, ss, 1.0 - x, ts),
                              o.omega_tol(), o.radius);
      },
      o.rule);
}

// Integral of omega([[O, (1-t) A], [t A, O]]).
IntegralEstimate offdiag_path(const ComplexMatrix& a, const CheckOptions& o) {
  return integrate_convex(
      [&](double x) {
        return omega_off_diag(Complex(1.0 - x) * a, Complex(x) * a, o.omega_tol(), o.radius);
      },
      o.rule);
}

void gate(const ComplexMatrix& a, Family family, std::string_view who) {
  const double residual = family_residual(a, family);
  if (!(residual <= kGateThreshold)) {
    throw DomainError(std::string(who) + ": input fails the " + std::string(to_string(family)) +
                      " gate (residual " + std::to_string(residual) + ")");
  }
}

// Re A and i Im A, the operands of the Cartesian block path.
std::pair<ComplexMatrix, ComplexMatrix> cartesian_operands(const ComplexMatrix& a) {
  return {real_part(a).matrix(), Complex(0.0, 1.0) * imag_part(a).matrix()};
}

}  // namespace

double CheckReport::worst_slack() const {
  double w = std::numeric_limits<double>::infinity();
  for (const auto& l : links) w = std::min(w, l.slack);
  return w;
}

bool CheckReport::marginal() const { return passed && worst_slack() < 0.0; }

std::string inputs_digest(std::span<const ComplexMatrix* const> operands, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (word >> (8 * byte)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (const ComplexMatrix* m : operands) {
    feed(m->dim());
    for (Complex z : m->entries()) {
      feed(std::bit_cast<std::uint64_t>(z.real()));
      feed(std::bit_cast<std::uint64_t>(z.imag()));
    }
  }
  feed(seed);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
  return out;
}

CheckReport check_scalar_seed(Complex a, Complex b, const CheckOptions& opts) {
  const ComplexMatrix ma(1, {a}), mb(1, {b});
  ReportBuilder rb("check_scalar_seed", digest_of({&ma, &mb}, opts.seed), opts.tol);
  rb.term("|a+b|", std::abs(a + b));
  rb.term("2*int|(1-t)a+tb|", 2.0 * scalar_integral_modulus(a, b));
  rb.term("|a|+|b|", std::abs(a) + std::abs(b));
  rb.link("|a+b|", "2*int|(1-t)a+tb|");
  rb.link("2*int|(1-t)a+tb|", "|a|+|b|");
  return rb.finish();
}

CheckReport check_triangle_refinement(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const CheckOptions& opts) {
  require_same_dim(a, b, "check_triangle_refinement");
  ReportBuilder rb("check_triangle_refinement", digest_of({&a, &b}, opts.seed), opts.tol);
  rb.term("omega(A+B)", omega(a + b, opts));
  rb.integral("2*int omega((1-t)A+tB)", omega_path(a, b, opts), 2.0);
  const double wa = rb.term("omega(A)", omega(a, opts));
  const double wb = rb.term("omega(B)", omega(b, opts));
  rb.term("omega(A)+omega(B)", wa + wb);
  rb.link("omega(A+B)", "2*int omega((1-t)A+tB)");
  rb.link("2*int omega((1-t)A+tB)", "omega(A)+omega(B)");
  return rb.finish();
}

CheckReport check_realpart_refinement(const ComplexMatrix& a, const CheckOptions& opts) {
  ReportBuilder rb("check_realpart_refinement", digest_of({&a}, opts.seed), opts.tol);
  rb.term("||Re A||", norm(real_part(a)));
  rb.integral("int omega((1-t)A+tA*)", omega_path(a, adjoint(a), opts));
  rb.term("omega(A)", omega(a, opts));
  rb.link("||Re A||", "int omega((1-t)A+tA*)");
  rb.link("int omega((1-t)A+tA*)", "omega(A)");
  return rb.finish();
}

CheckReport check_block_refinement(const ComplexMatrix& s, const ComplexMatrix& t,
                                   const CheckOptions& opts) {
  require_same_dim(s, t, "check_block_refinement");
  ReportBuilder rb("check_block_refinement", digest_of({&s, &t}, opts.seed), opts.tol);
  rb.term("||S+T||", norm(s + t));
  rb.integral("2*int omega(block_t)", block_path(s, t, opts), 2.0);
  rb.term("2*omega([[O,S],[T*,O]])",
          2.0 * omega_off_diag(s, adjoint(t), opts.omega_tol(), opts.radius));
  rb.link("||S+T||", "2*int omega(block_t)");
  rb.link("2*int omega(block_t)", "2*omega([[O,S],[T*,O]])");
  return rb.finish();
}

CheckReport check_offdiag_bound(const ComplexMatrix& a, const CheckOptions& opts) {
  ReportBuilder rb("check_offdiag_bound", digest_of({&a}, opts.seed), opts.tol);
  rb.term("omega(A)", omega(a, opts));
  rb.integral("2*int omega([[O,(1-t)A],[tA,O]])", offdiag_path(a, opts), 2.0);
  rb.link("omega(A)", "2*int omega([[O,(1-t)A],[tA,O]])");
  return rb.finish();
}

CheckReport check_normal_identity(const ComplexMatrix& a, const CheckOptions& opts) {
  gate(a, Family::normal, "check_normal_identity");
  ReportBuilder rb("check_normal_identity", digest_of({&a}, opts.seed), opts.tol);
  const double lhs = rb.integral("2*int omega([[O,(1-t)A],[tA,O]])", offdiag_path(a, opts), 2.0);
  const double na = rb.term("||A||", norm(a));
  rb.term("|2*int - ||A|||", std::abs(lhs - na));
  rb.link("2*int omega([[O,(1-t)A],[tA,O]])", "||A||");
  rb.link("||A||", "2*int omega([[O,(1-t)A],[tA,O]])");
  return rb.finish();
}

CheckReport check_sup_theta_identity(const ComplexMatrix& a, const CheckOptions& opts) {
  if (opts.theta_grid < 8) {
    throw DomainError("check_sup_theta_identity: theta_grid must be at least 8");
  }
  ReportBuilder rb("check_sup_theta_identity", digest_of({&a}, opts.seed), opts.tol);
  const ComplexMatrix as = adjoint(a);
  // F(theta) = int omega((1-t) e^{i theta} A + t e^{-i theta} A*); F has period
  // pi. The scan uses the Gauss-Legendre nodes with a single bracket panel;
  // the winning angles are re-integrated with the full rule.
  QuadratureRule scan_rule = opts.rule;
  scan_rule.bracket_panels = 1;
  auto f_with = [&](double theta, const QuadratureRule& rule) {
    const Complex r = std::polar(1.0, theta);
    return integrate_omega_path(r * a, std::conj(r) * as, rule, opts.omega_tol(), opts.radius);
  };
  auto scan = [&](double theta) { return f_with(theta, scan_rule).value; };
  const int g = opts.theta_grid;
  const double step = std::numbers::pi / g;
  double scan_best = -1.0, scan_theta = 0.0;
  for (int k = 0; k < g; ++k) {
    const double v = scan(step * k);
    if (v > scan_best) scan_best = v, scan_theta = step * k;
  }
  const LocalMax polished =
      maximize_on_interval(scan, scan_theta - step, scan_theta + step, opts.theta_golden_width);
  if (polished.value > scan_best) scan_theta = polished.arg;

  double best = f_with(scan_theta, opts.rule).value;
  double best_theta = scan_theta;
  // The maximizing rotation of the numerical radius is always a candidate:
  // there Re of the whole path equals Re(e^{i theta} A).
  const RadiusResult rad = numerical_radius(a, opts.omega_tol(), opts.radius);
  {
    const double v = f_with(rad.argmax_theta, opts.rule).value;
    if (v > best) best = v, best_theta = rad.argmax_theta;
  }
  best_theta = std::fmod(best_theta, std::numbers::pi);
  if (best_theta < 0.0) best_theta += std::numbers::pi;

  const double na = norm(a);
  rb.term("sup_theta int omega(rotated path)", best);
  rb.term("argmax theta", best_theta);
  rb.term("omega(A)", rad.value);
  rb.term("omega(A)-sup", rad.value - best);
  rb.term("grid bound ||A||*pi/(2G)", na * step / 2.0);
  rb.term("||A||", na);
  rb.link("sup_theta int omega(rotated path)", "omega(A)");
  rb.link("omega(A)-sup", "grid bound ||A||*pi/(2G)");
  if (family_residual(a, Family::normal) <= kGateThreshold) {
    rb.link("sup_theta int omega(rotated path)", "||A||");
    rb.link("||A||", "sup_theta int omega(rotated path)");
  }
  return rb.finish();
}

CheckReport check_sym_skew_bound(const ComplexMatrix& a, const CheckOptions& opts) {
  ReportBuilder rb("check_sym_skew_bound", digest_of({&a}, opts.seed), opts.tol);
  const ComplexMatrix as = adjoint(a);
  rb.term("||Re A||", norm(real_part(a)));
  rb.term("||Im A||", norm(imag_part(a)));
  rb.integral("int omega((1-t)A+tA*)", omega_path(a, as, opts));
  rb.integral("int omega((1-t)A-tA*)", omega_path(a, -as, opts));
  rb.term("omega(A)", omega(a, opts));
  rb.link("||Re A||", "int omega((1-t)A+tA*)");
  rb.link("||Im A||", "int omega((1-t)A-tA*)");
  rb.link("int omega((1-t)A+tA*)", "omega(A)");
  rb.link("int omega((1-t)A-tA*)", "omega(A)");
  return rb.finish();
}

CheckReport check_hermite_hadamard(const ComplexMatrix& a, const ComplexMatrix& b,
                                   const CheckOptions& opts) {
  require_same_dim(a, b, "check_hermite_hadamard");
  ReportBuilder rb("check_hermite_hadamard", digest_of({&a, &b}, opts.seed), opts.tol);
  rb.term("||A+B||", norm(a + b));
  rb.integral("2*int||(1-t)A+tB||", norm_path(a, b, opts), 2.0);
  rb.term("||A||+||B||", norm(a) + norm(b));
  rb.link("||A+B||", "2*int||(1-t)A+tB||");
  rb.link("2*int||(1-t)A+tB||", "||A||+||B||");
  return rb.finish();
}

CheckReport check_min_lemma(const ComplexMatrix& s, const ComplexMatrix& t,
                            const CheckOptions& opts) {
  require_same_dim(s, t, "check_min_lemma");
  ReportBuilder rb("check_min_lemma", digest_of({&s, &t}, opts.seed), opts.tol);
  rb.term("||S+T||", norm(s + t));
  const double iw = rb.integral("int omega(block_t)", block_path(s, t, opts));
  const double in = rb.integral("int||(1-t)S+tT||", norm_path(s, t, opts));
  rb.term("2*min(int omega(block_t), int||(1-t)S+tT||)", 2.0 * std::min(iw, in));
  rb.link("||S+T||", "2*min(int omega(block_t), int||(1-t)S+tT||)");
  return rb.finish();
}

CheckReport check_refined_sum(const ComplexMatrix& s, const ComplexMatrix& t,
                              const CheckOptions& opts) {
  require_same_dim(s, t, "check_refined_sum");
  ReportBuilder rb("check_refined_sum", digest_of({&s, &t}, opts.seed), opts.tol);
  const double nst = rb.term("||S+T||", norm(s + t));
  const double iw = rb.integral("int omega(block_t)", block_path(s, t, opts));
  const double in = rb.integral("int||(1-t)S+tT||", norm_path(s, t, opts));
  rb.term("||S+T||+|I_omega-I_N|", nst + std::abs(iw - in));
  rb.term("I_omega+I_N", iw + in);
  rb.term("||S||+||T||", norm(s) + norm(t));
  rb.link("||S+T||+|I_omega-I_N|", "I_omega+I_N");
  rb.link("I_omega+I_N", "||S||+||T||");
  return rb.finish();
}

CheckReport check_lower_bound(const ComplexMatrix& a, const CheckOptions& opts) {
  ReportBuilder rb("check_lower_bound", digest_of({&a}, opts.seed), opts.tol);
  const auto [re, i_im] = cartesian_operands(a);
  const double half_norm = rb.term("||A||/2", 0.5 * norm(a));
  const double iw = rb.integral("I_omega", block_path(re, i_im, opts));
  const double in = rb.integral("I_N", norm_path(re, i_im, opts));
  rb.term("||A||/2+|I_omega-I_N|/2", half_norm + 0.5 * std::abs(iw - in));
  rb.term("omega(A)", omega(a, opts));
  rb.link("||A||/2+|I_omega-I_N|/2", "omega(A)");
  rb.link("||A||/2", "omega(A)");
  return rb.finish();
}

CheckReport check_nilpotent_equality(const ComplexMatrix& a, const CheckOptions& opts) {
  gate(a, Family::nilpotent_square_zero, "check_nilpotent_equality");
  ReportBuilder rb("check_nilpotent_equality", digest_of({&a}, opts.seed), opts.tol);
  const auto [re, i_im] = cartesian_operands(a);
  const double iw = rb.integral("I_omega", block_path(re, i_im, opts));
  const double in = rb.integral("I_N", norm_path(re, i_im, opts));
  rb.term("|I_omega-I_N|", std::abs(iw - in));
  rb.term("omega(A)-||A||/2", omega(a, opts) - 0.5 * norm(a));
  rb.link("I_omega", "I_N");
  rb.link("I_N", "I_omega");
  return rb.finish();
}

std::span<const CheckerInfo> checker_registry() {
  using M = const ComplexMatrix&;
  using O = const CheckOptions&;
  static const std::array<CheckerInfo, 13> kCheckers{{
      {"check_scalar_seed", Arity::scalar_pair, true,
       [](M a, M b, O o) { return check_scalar_seed(a(0, 0), b(0, 0), o); }},
      {"check_triangle_refinement", Arity::pair, true,
       [](M a, M b, O o) { return check_triangle_refinement(a, b, o); }},
      {"check_realpart_refinement", Arity::single, true,
       [](M a, M, O o) { return check_realpart_refinement(a, o); }},
      {"check_block_refinement", Arity::pair, true,
       [](M a, M b, O o) { return check_block_refinement(a, b, o); }},
      {"check_offdiag_bound", Arity::single, false,
       [](M a, M, O o) { return check_offdiag_bound(a, o); }},
      {"check_normal_identity", Arity::single, false,
       [](M a, M, O o) { return check_normal_identity(a, o); }},
      {"check_sup_theta_identity", Arity::single, false,
       [](M a, M, O o) { return check_sup_theta_identity(a, o); }},
      {"check_sym_skew_bound", Arity::single, false,
       [](M a, M, O o) { return check_sym_skew_bound(a, o); }},
      {"check_hermite_hadamard", Arity::pair, true,
       [](M a, M b, O o) { return check_hermite_hadamard(a, b, o); }},
      {"check_min_lemma", Arity::pair, false,
       [](M a, M b, O o) { return check_min_lemma(a, b, o); }},
      {"check_refined_sum", Arity::pair, true,
       [](M a, M b, O o) { return check_refined_sum(a, b, o); }},
      {"check_lower_bound", Arity::single, false,
       [](M a, M, O o) { return check_lower_bound(a, o); }},
      {"check_nilpotent_equality", Arity::single, false,
       [](M a, M, O o) { return check_nilpotent_equality(a, o); }},
  }};
  return kCheckers;
}

const CheckerInfo* find_checker(std::string_view name) {
  for (const auto& c : checker_registry())
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace numrad
