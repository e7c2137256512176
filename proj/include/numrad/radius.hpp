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

#ifndef NUMRAD_RADIUS_HPP
#define NUMRAD_RADIUS_HPP

#include <functional>

#include "numrad/linalg.hpp"

namespace numrad {

/// Knobs of the rotation search. omega(A) = sup over theta of
/// lambda_max(Re(e^{i theta} A)); the sup is located on a uniform grid of
/// `grid` angles and polished around the best grid maxima by Brent's
/// parabolic search, which falls back to golden-section steps near kinks.
struct RadiusOptions {
  int grid = 720;
  /// Absolute part of the local search's stopping width, in radians; the
  /// search also keeps Brent's relative term sqrt(eps) * |theta|.
  double golden_width = 1e-10;
  /// Upper limit on the number of grid maxima that get refined.
  int max_refinements = 4;
};

struct RadiusResult {
  double value = 0.0;
  /// Maximizing rotation angle in [0, 2 pi).
  double argmax_theta = 0.0;
  /// Number of Hermitian eigenvalue solves spent.
  int evaluations = 0;
  /// Certified upper bound on omega: the support function of the numerical
  /// range dominates omega * cos(theta - theta*), so the best grid value
  /// divided by cos(spacing / 2) cannot be beaten.
  double upper_bound = 0.0;
};

/// lambda_max(Re(e^{i theta} A)).
double rotated_hermitian_max(const ComplexMatrix& a, double theta);

RadiusResult numerical_radius(const ComplexMatrix& a, double tol,
                              const RadiusOptions& opts = {});

/// omega([[O, X], [Y, O]]). Evaluated through the identity
/// lambda_max(Re(e^{i theta} [[O,X],[Y,O]])) = ||e^{2 i theta} X + Y*|| / 2,
/// which needs only n x n work; agrees with numerical_radius on the
/// assembled 2n x 2n matrix.
double omega_off_diag(const ComplexMatrix& x, const ComplexMatrix& y, double tol,
                      const RadiusOptions& opts = {});

struct LocalMax {
  double value = 0.0;
  double arg = 0.0;
  int evaluations = 0;
};

/// Brent's parabolic/golden search for a maximum of f on [lo, hi], stopped
/// once the bracket is narrower than about 2 * (width / 3 + sqrt(eps) * |x|)
/// around the current best x. Returns the best point seen.
LocalMax maximize_on_interval(const std::function<double(double)>& f, double lo, double hi,
                              double width);

/// Integral over [0,1] of |(1-t) a + t b| in closed form.
double scalar_integral_modulus(Complex a, Complex b);

/// Same integral by composite Gauss-Legendre on panels graded geometrically
/// away from the point of the line closest to the origin. Used by
/// scalar_integral_modulus when a and b are so close that the closed form
/// cancels.
double scalar_integral_modulus_quadrature(Complex a, Complex b);

}  // namespace numrad

#endif  // NUMRAD_RADIUS_HPP
