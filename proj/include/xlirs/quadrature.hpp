// SPDX-License-Identifier: Apache-2.0
//
// xlirs: near-field SNR analysis for extremely large intelligent reflecting surfaces
// Copyright (C) 2026 The xlirs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef XLIRS_QUADRATURE_HPP
#define XLIRS_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace xlirs
{

struct QuadSpec
{
    double relative_tolerance = 1e-9;
    int max_refinement_levels = 20;
    int base_points_per_panel = 15;

    // Throws ValidationError unless tolerance is in (0, 1e-3], levels >= 1 and points >= 2.
    void validate() const;
};

struct QuadResult
{
    double value = 0.0;
    // Sum over panels of |panel rule - children rules|; bounds the true error for smooth
    // integrands since the returned value uses the children.
    double error_estimate = 0.0;
    int panels = 0;
};

struct Interval
{
    double lo = 0.0;
    double hi = 0.0;
};

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int points);

// Globally adaptive bisection on Gauss-Legendre panels. Converged when the summed
// error estimate is below relative_tolerance times the integral of |f|. Throws
// ConvergenceError (with the best estimate) when a panel would exceed
// max_refinement_levels bisections and the tolerance is still unmet.
QuadResult integrate_1d(const std::function<double(double)> &f, double a, double b, const QuadSpec &spec = {});

// Adaptive tensor-product panels on y x z, split into quadrants. f is called as f(y, z).
QuadResult integrate_rect_2d(const std::function<double(double, double)> &f, Interval y, Interval z,
                             const QuadSpec &spec = {});

// integral_0^{2 pi} dzeta integral_0^R f(r, zeta) r dr. The Jacobian r is applied here.
// Periodic trapezoid in zeta (point count doubled per radius until converged) and
// adaptive Gauss-Legendre in r.
QuadResult integrate_disk_polar(const std::function<double(double, double)> &f, double radius,
                                const QuadSpec &spec = {});

} // namespace xlirs

#endif
