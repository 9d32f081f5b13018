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

#ifndef XLIRS_SNR_MODELS_HPP
#define XLIRS_SNR_MODELS_HPP

#include "xlirs/quadrature.hpp"
#include "xlirs/scenario.hpp"

#include <optional>
#include <string>
#include <variant>

// Analytical SNR models for the surface-assisted link.
//
// Formulas parameterized by the distance ratio rho use the nearer node as "q", so
// rho = r_near / r_far lies in (0, 1] whatever the tx/rx labelling.

namespace xlirs
{

// Inscribed/circumscribed disk bounds on the rectangular-aperture integral.
struct BoundsPair
{
    SnrEstimate lower;
    SnrEstimate upper;
    double inner_radius = 0.0; // min(L_y, L_z) / 2
    double outer_radius = 0.0; // sqrt(L_y^2 + L_z^2) / 2
};

// beta0^2 in the plane-wave model gamma = beta0^2 Pbar M^2 / (r_q^2 r_p^2).
struct UpwConfig
{
    double beta0_squared = 0.0;

    // A^2 Psi_q Psi_p / (16 pi^2): makes the plane-wave model the far-field limit of the
    // element-wise sum, so the two agree exactly for a single boresight element.
    static UpwConfig far_field_default(const Scenario &scenario);

    // beta0 = (lambda / 4 pi)^2, the free-space power gain at 1 m between isotropic antennas.
    static UpwConfig free_space_reference(double wavelength);
};

// Relative |r_q - r_p| / max(r_q, r_p) below which rho is taken as exactly 1.
inline constexpr double kEqualRangeTolerance = 1e-9;
// Up to this relative range difference the rho < 1 formulas carry a conditioning warning.
inline constexpr double kNearEqualRangeWarning = 1e-3;
// Boresight closed forms need |Phi| L_y / r_near and |Omega| L_z / r_near below this.
inline constexpr double kBoresightMargin = 0.1;
// Integral models warn when d / r exceeds this.
inline constexpr double kIntegralEpsilonWarning = 1e-2;
// The ULA closed form needs rho <= 0.1 and warns above 0.01.
inline constexpr double kUlaRhoLimit = 0.1;
inline constexpr double kUlaRhoWarning = 0.01;

// Integrand of the double integral over the surface:
// [bracket_q(y, z) bracket_p(y, z)]^(-3/4) with bracket(y, z) = 1 - 2 (y Phi + z Omega) / r + (y^2 + z^2) / r^2.
double surface_kernel(const Scenario &scenario, double y, double z);

// A^2 Pbar Psi_q Psi_p / (16 pi^2 d^power r_q^2 r_p^2); power is 4 for the surface, 2 for the line.
double integral_prefactor(const Scenario &scenario, int spacing_power);

// Double-integral approximation of the exact sum over [-L_y/2, L_y/2] x [-L_z/2, L_z/2].
SnrEstimate snr_integral_upa(const Scenario &scenario, const QuadSpec &spec = {});

// The polar-form integral over a disk of the given radius, prefactor included.
double snr_disk_integral(const Scenario &scenario, double radius, const QuadSpec &spec = {});

BoundsPair snr_bounds_general(const Scenario &scenario, const QuadSpec &spec = {});

struct BoresightCheck
{
    bool satisfied = false;
    double margin = 0.0; // max over nodes of |Phi| L_y / r_near and |Omega| L_z / r_near
    std::string detail;
};
BoresightCheck check_boresight(const Scenario &scenario);

// Closed forms for nodes on the boresight: disk bounds through F(. | 2) when rho < 1,
// the exact arctan form when rho = 1. Throws ValidationError if check_boresight fails.
using BoresightResult = std::variant<BoundsPair, SnrEstimate>;
BoresightResult snr_boresight(const Scenario &scenario);

// Boresight closed form for a disk of radius R (the function G(R) with its prefactor):
// xi^2 Pbar [F(a | 2) - F(b | 2)]^2 / (rho c^2), c = sqrt(1 - rho^2) / rho,
// a = atan(c) / 2, b = atan(c cos(atan(R / r_near))) / 2. Evaluated without forming
// rho / (1 - rho^2) so it stays finite as rho -> 1.
double boresight_disk_value(const Scenario &scenario, double radius);

// Limit of the boresight SNR as the surface grows without bound.
SnrEstimate snr_asymptotic_upa(const Scenario &scenario);

// Line-array (m_y = 1) integral over [-L_z/2, L_z/2]. Throws ValidationError for m_y != 1.
SnrEstimate snr_ula_integral(const Scenario &scenario, const QuadSpec &spec = {});

// Line-array closed form through the end-point angles alpha_1, alpha_2 seen from the near node.
SnrEstimate snr_ula_closed(const Scenario &scenario);

// Its L_z -> infinity limit, proportional to [F(pi/4 | 2)]^2.
SnrEstimate snr_ula_asymptotic(const Scenario &scenario);

// End-point angles of the line array seen from the near node.
struct UlaAngles
{
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};
UlaAngles ula_angles(const Scenario &scenario);

// Plane-wave baseline, square power scaling in M. Uses far_field_default() when unset.
SnrEstimate snr_upw(const Scenario &scenario, std::optional<UpwConfig> upw = std::nullopt);

} // namespace xlirs

#endif
