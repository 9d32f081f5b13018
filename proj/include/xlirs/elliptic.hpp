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

#ifndef XLIRS_ELLIPTIC_HPP
#define XLIRS_ELLIPTIC_HPP

// Elliptic integrals of the first kind in the *parameter* convention:
//
//     F(theta | k) = integral_0^theta dbeta / sqrt(1 - k sin^2 beta)
//
// k multiplies sin^2 directly; it is not the modulus (modulus convention writes k^2).
// k > 1 is allowed as long as the integrand stays real, i.e. theta <= asin(1/sqrt(k)).
// The surface SNR formulas use k = 2, where the upper end theta = pi/4 is an integrable
// singularity.

namespace xlirs
{

// Carlson's symmetric integral R_F(x, y, z). x, y, z >= 0 with at most one zero.
double carlson_rf(double x, double y, double z);

// Complete integral K(m) by the arithmetic-geometric mean, 0 <= m < 1.
double ellip_k_complete(double m);

// F(theta | k), odd in theta. Throws DomainError when 1 - k sin^2 is negative anywhere on
// [0, theta], or when the integral diverges (k = 1, theta >= pi/2).
double ellip_f(double theta, double k);

// F(theta | 2) through the reciprocal-parameter reduction
//     F(theta | 2) = F(theta' | 1/2) / sqrt(2),  sin theta' = sqrt(2) sin theta,
// with cos^2 theta' = cos 2 theta so the singular end theta = pi/4 maps cleanly onto
// theta' = pi/2, where the value is K(1/2)/sqrt(2). 0 <= theta <= pi/4; doubles within
// 4 ulps of pi/4 return the endpoint value.
double ellip_f_param2(double theta);

// Odd extension of F(. | 2) to [-pi/4, pi/4].
double ellip_f_param2_signed(double theta);

} // namespace xlirs

#endif
