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

#include "xlirs/elliptic.hpp"
#include "xlirs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace xlirs
{

namespace
{
constexpr double kPi = std::numbers::pi;

// Rounding on the amplitude near the real-domain edge can push 1 - k sin^2 slightly
// negative; anything this close to zero is treated as the endpoint itself.
constexpr double kEdgeSlack = 64.0 * std::numeric_limits<double>::epsilon();
constexpr double kEndpointUlps = 4.0;

// K(m) for any m < 1. Negative m is fine for the AGM.
double agm_complete(double m)
{
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    for (int i = 0; i < 64 && std::abs(a - b) > 4e-16 * a; ++i)
    {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return kPi / (a + b);
}

// F on the principal range 0 <= phi <= pi/2.
double f_principal(double phi, double k)
{
    const double s = std::sin(phi);
    const double c = std::cos(phi);
    const double delta = std::max(0.0, 1.0 - k * s * s);
    return s * carlson_rf(c * c, delta, 1.0);
}
} // namespace

double carlson_rf(double x, double y, double z)
{
    if (x < 0.0 || y < 0.0 || z < 0.0 || !std::isfinite(x + y + z))
        throw DomainError("carlson_rf: arguments must be finite and nonnegative");
    if ((x == 0.0) + (y == 0.0) + (z == 0.0) > 1)
        throw DomainError("carlson_rf: at most one argument may be zero");

    // Truncation error of the fifth-order series is about tol^6 / 4.
    constexpr double tol = 1e-3;
    double mu = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
    for (int i = 0; i < 200; ++i)
    {
        mu = (x + y + z) / 3.0;
        dx = 1.0 - x / mu;
        dy = 1.0 - y / mu;
        dz = 1.0 - z / mu;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < tol)
            break;
        const double sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const double lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(mu);
}

double ellip_k_complete(double m)
{
    if (!(m >= 0.0 && m < 1.0))
        throw DomainError("ellip_k_complete: parameter must lie in [0, 1), got " + std::to_string(m));
    return agm_complete(m);
}

double ellip_f(double theta, double k)
{
    if (!std::isfinite(theta) || !std::isfinite(k))
        throw DomainError("ellip_f: arguments must be finite");
    if (theta < 0.0)
        return -ellip_f(-theta, k);
    if (theta == 0.0)
        return 0.0;
    if (k == 0.0)
        return theta;
    if (k == 2.0)
        return ellip_f_param2(theta);

    if (k > 1.0)
    {
        // Real only up to the first zero of 1 - k sin^2.
        const double s = std::sin(theta);
        if (theta > kPi / 2 || 1.0 - k * s * s < -kEdgeSlack)
            throw DomainError("ellip_f: 1 - k sin^2(theta) < 0 for k = " + std::to_string(k) +
                              ", theta = " + std::to_string(theta));
        // The symmetric form covers k > 1 directly: the reciprocal reduction
        // F(theta|k) = F(theta'|1/k)/sqrt(k) collapses to the same R_F arguments.
        return f_principal(theta, k);
    }

    if (k == 1.0 && theta >= kPi / 2)
        throw DomainError("ellip_f: integral diverges for k = 1, theta >= pi/2");

    // Quasi-periodicity: F(n pi + phi) = 2 n K + F(phi), |phi| <= pi/2.
    const double n = std::round(theta / kPi);
    const double phi = theta - n * kPi;
    const double principal = phi >= 0.0 ? f_principal(phi, k) : -f_principal(-phi, k);
    return n == 0.0 ? principal : 2.0 * n * agm_complete(k) + principal;
}

double ellip_f_param2(double theta)
{
    constexpr double quarter = kPi / 4;
    if (!std::isfinite(theta) || theta < 0.0)
        throw DomainError("ellip_f: amplitude must be >= 0");
    if (theta > quarter * (1.0 + kEdgeSlack))
        throw DomainError("ellip_f: 1 - 2 sin^2(theta) < 0 for theta = " + std::to_string(theta) +
                          " (limit pi/4)");
    if (theta == 0.0)
        return 0.0;
    // The doubles adjacent to pi/4 stand for the endpoint; evaluating them literally
    // would be off by sqrt(2 |theta - pi/4|), about 1e-8.
    if (std::abs(theta - quarter) <= kEndpointUlps * quarter * std::numeric_limits<double>::epsilon())
        return agm_complete(0.5) / std::numbers::sqrt2;
    // theta' with sin theta' = sqrt(2) sin theta; cos^2 theta' = cos 2 theta.
    const double cos2 = std::max(0.0, std::cos(2.0 * theta));
    if (cos2 == 0.0)
        return agm_complete(0.5) / std::numbers::sqrt2;
    const double sin_prime = std::min(1.0, std::numbers::sqrt2 * std::sin(theta));
    const double cos_theta = std::cos(theta); // 1 - sin^2 theta' / 2 = cos^2 theta
    return sin_prime * carlson_rf(cos2, cos_theta * cos_theta, 1.0) / std::numbers::sqrt2;
}

double ellip_f_param2_signed(double theta)
{
    return theta < 0.0 ? -ellip_f_param2(-theta) : ellip_f_param2(theta);
}

} // namespace xlirs
