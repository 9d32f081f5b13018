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

#include "xlirs/snr_models.hpp"
#include "xlirs/elliptic.hpp"
#include "xlirs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace xlirs
{

namespace
{
constexpr double kPi = std::numbers::pi;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

double bracket(const NodePosition &n, double y, double z)
{
    const double r = n.range();
    return 1.0 - 2.0 * (y * n.dir_y() + z * n.dir_z()) / r + (y * y + z * z) / (r * r);
}

double pow_m34(double x)
{
    const double s = std::sqrt(x);
    return 1.0 / (s * std::sqrt(s));
}

void add_epsilon_warnings(const Scenario &s, SnrEstimate &est)
{
    const auto &g = s.geometry();
    for (const auto *node : {&s.tx(), &s.rx()})
    {
        const double eps = node->epsilon(g);
        if (eps > kIntegralEpsilonWarning)
            est.diagnostics.push_back(std::string(node == &s.tx() ? "epsilon_q" : "epsilon_p") + " = " + fmt(eps) +
                                      " exceeds " + fmt(kIntegralEpsilonWarning) +
                                      "; integral approximation may be inaccurate");
    }
}

// Relative range difference |r_far - r_near| / r_far.
double range_gap(const Scenario &s)
{
    const double rf = s.far_node().range(), rn = s.near_node().range();
    return (rf - rn) / rf;
}

// c = sqrt(1 - rho^2) / rho computed from the ranges, no cancellation in 1 - rho^2.
double rho_cotangent(const Scenario &s)
{
    const double rf = s.far_node().range(), rn = s.near_node().range();
    return std::sqrt((rf - rn) * (rf + rn)) / rn;
}

void add_range_warnings(const Scenario &s, SnrEstimate &est)
{
    const double gap = range_gap(s);
    if (gap >= kEqualRangeTolerance && gap < kNearEqualRangeWarning)
        est.diagnostics.push_back("near-equal ranges (relative gap " + fmt(gap) +
                                  "); rho < 1 formula is ill-conditioned here");
}

void require_boresight(const Scenario &s)
{
    const auto check = check_boresight(s);
    if (!check.satisfied)
        throw ValidationError("boresight condition violated: " + check.detail);
}

void require_line_array(const Scenario &s, const char *model)
{
    if (s.geometry().m_y() != 1)
        throw ValidationError(std::string(model) + " requires m_y = 1");
}

void require_ula_regime(const Scenario &s, const char *model, SnrEstimate &est)
{
    require_line_array(s, model);
    const double rho = s.distance_ratio();
    if (rho > kUlaRhoLimit)
        throw ValidationError(std::string(model) + " requires r_near / r_far <= " + fmt(kUlaRhoLimit) + " (got " +
                              fmt(rho) + ")");
    if (rho > kUlaRhoWarning)
        est.diagnostics.push_back("rho = " + fmt(rho) + " above " + fmt(kUlaRhoWarning) +
                                  "; small-rho approximation degrades");
}

// A^2 Pbar Psi_far cos(phi_near) / (pi^2 d^2 r_far^2): shared factor of the line-array forms.
double ula_prefactor(const Scenario &s)
{
    const auto &g = s.geometry();
    const auto &q = s.near_node();
    const auto &p = s.far_node();
    const double a = g.element_area(), d = g.spacing();
    return a * a * s.transmit_snr() * p.dir_x() * std::cos(q.azimuth()) /
           (kPi * kPi * d * d * p.range() * p.range());
}
} // namespace

UpwConfig UpwConfig::far_field_default(const Scenario &scenario)
{
    const double a = scenario.geometry().element_area();
    return {a * a * scenario.tx().dir_x() * scenario.rx().dir_x() / (16.0 * kPi * kPi)};
}

UpwConfig UpwConfig::free_space_reference(double wavelength)
{
    const double beta0 = std::pow(wavelength / (4.0 * kPi), 2);
    return {beta0 * beta0};
}

double surface_kernel(const Scenario &scenario, double y, double z)
{
    return pow_m34(bracket(scenario.tx(), y, z) * bracket(scenario.rx(), y, z));
}

double integral_prefactor(const Scenario &scenario, int spacing_power)
{
    const auto &g = scenario.geometry();
    const double a = g.element_area(), rq = scenario.tx().range(), rp = scenario.rx().range();
    return a * a * scenario.transmit_snr() * scenario.tx().dir_x() * scenario.rx().dir_x() /
           (16.0 * kPi * kPi * std::pow(g.spacing(), spacing_power) * rq * rq * rp * rp);
}

SnrEstimate snr_integral_upa(const Scenario &scenario, const QuadSpec &spec)
{
    const auto &g = scenario.geometry();
    const double hy = 0.5 * g.length_y(), hz = 0.5 * g.length_z();
    const auto res = integrate_rect_2d([&](double y, double z) { return surface_kernel(scenario, y, z); },
                                       {-hy, hy}, {-hz, hz}, spec);
    SnrEstimate est{integral_prefactor(scenario, 4) * res.value * res.value, ModelTag::IntegralUpa, {}};
    add_epsilon_warnings(scenario, est);
    return est;
}

double snr_disk_integral(const Scenario &scenario, double radius, const QuadSpec &spec)
{
    const auto &tx = scenario.tx();
    const auto &rx = scenario.rx();
    // In polar coordinates y = r cos(zeta), z = r sin(zeta).
    const auto res = integrate_disk_polar(
        [&](double r, double zeta) {
            const double c = std::cos(zeta), s = std::sin(zeta);
            return pow_m34(bracket(tx, r * c, r * s) * bracket(rx, r * c, r * s));
        },
        radius, spec);
    return integral_prefactor(scenario, 4) * res.value * res.value;
}

BoundsPair snr_bounds_general(const Scenario &scenario, const QuadSpec &spec)
{
    const auto &g = scenario.geometry();
    const double r1 = 0.5 * std::min(g.length_y(), g.length_z());
    const double r2 = 0.5 * std::hypot(g.length_y(), g.length_z());
    BoundsPair out;
    out.inner_radius = r1;
    out.outer_radius = r2;
    out.lower = {snr_disk_integral(scenario, r1, spec), ModelTag::BoundLower, {}};
    out.upper = {snr_disk_integral(scenario, r2, spec), ModelTag::BoundUpper, {}};
    add_epsilon_warnings(scenario, out.lower);
    add_epsilon_warnings(scenario, out.upper);
    return out;
}

BoresightCheck check_boresight(const Scenario &scenario)
{
    const auto &g = scenario.geometry();
    const double rn = scenario.near_node().range();
    BoresightCheck out;
    std::string worst = "";
    for (const auto *node : {&scenario.tx(), &scenario.rx()})
    {
        const char *name = node == &scenario.tx() ? "tx" : "rx";
        const double my = std::abs(node->dir_y()) * g.length_y() / rn;
        const double mz = std::abs(node->dir_z()) * g.length_z() / rn;
        if (my >= out.margin)
        {
            out.margin = my;
            worst = std::string(name) + " |Phi| L_y / r_near = " + fmt(my);
        }
        if (mz >= out.margin)
        {
            out.margin = mz;
            worst = std::string(name) + " |Omega| L_z / r_near = " + fmt(mz);
        }
    }
    out.satisfied = out.margin < kBoresightMargin;
    out.detail = worst + (out.satisfied ? " within " : " exceeds ") + fmt(kBoresightMargin);
    return out;
}

double boresight_disk_value(const Scenario &scenario, double radius)
{
    const double xi = scenario.geometry().occupation_ratio();
    const double rn = scenario.near_node().range();
    const double rho = scenario.distance_ratio();
    const double c = rho_cotangent(scenario);
    const double cos_edge = 1.0 / std::sqrt(1.0 + (radius / rn) * (radius / rn)); // cos(atan(R / r_near))
    if (c == 0.0)
    {
        // rho = 1 limit of the same disk integral.
        const double h = 0.5 * (1.0 - cos_edge);
        return xi * xi * scenario.transmit_snr() * h * h;
    }
    const double diff = ellip_f_param2(0.5 * std::atan(c)) - ellip_f_param2(0.5 * std::atan(c * cos_edge));
    const double ratio = diff / c;
    return xi * xi * scenario.transmit_snr() * ratio * ratio / rho;
}

BoresightResult snr_boresight(const Scenario &scenario)
{
    require_boresight(scenario);
    const auto check = check_boresight(scenario);
    const auto &g = scenario.geometry();
    std::vector<std::string> margin_note;
    if (check.margin > 1e-3)
        margin_note.push_back("boresight margin: " + check.detail);

    if (range_gap(scenario) < kEqualRangeTolerance)
    {
        const double rn = scenario.near_node().range();
        const double xi = g.occupation_ratio();
        const double a = g.length_y() / (2.0 * rn), b = g.length_z() / (2.0 * rn);
        const double t = std::atan(a * b / std::sqrt(a * a + b * b + 1.0));
        SnrEstimate est{xi * xi * scenario.transmit_snr() * t * t / (kPi * kPi), ModelTag::BoresightClosed,
                        margin_note};
        return est;
    }

    BoundsPair out;
    out.inner_radius = 0.5 * std::min(g.length_y(), g.length_z());
    out.outer_radius = 0.5 * std::hypot(g.length_y(), g.length_z());
    out.lower = {boresight_disk_value(scenario, out.inner_radius), ModelTag::BoundLower, margin_note};
    out.upper = {boresight_disk_value(scenario, out.outer_radius), ModelTag::BoundUpper, margin_note};
    add_range_warnings(scenario, out.lower);
    add_range_warnings(scenario, out.upper);
    return out;
}

SnrEstimate snr_asymptotic_upa(const Scenario &scenario)
{
    require_boresight(scenario);
    const double xi = scenario.geometry().occupation_ratio();
    const double base = xi * xi * scenario.transmit_snr();
    if (range_gap(scenario) < kEqualRangeTolerance)
        return {base / 4.0, ModelTag::AsymptoticUpa, {}};
    const double c = rho_cotangent(scenario);
    const double ratio = ellip_f_param2(0.5 * std::atan(c)) / c;
    SnrEstimate est{base * ratio * ratio / scenario.distance_ratio(), ModelTag::AsymptoticUpa, {}};
    add_range_warnings(scenario, est);
    return est;
}

SnrEstimate snr_ula_integral(const Scenario &scenario, const QuadSpec &spec)
{
    require_line_array(scenario, "ula-integral");
    const double hz = 0.5 * scenario.geometry().length_z();
    const auto res =
        integrate_1d([&](double z) { return surface_kernel(scenario, 0.0, z); }, -hz, hz, spec);
    SnrEstimate est{integral_prefactor(scenario, 2) * res.value * res.value, ModelTag::UlaIntegral, {}};
    add_epsilon_warnings(scenario, est);
    return est;
}

UlaAngles ula_angles(const Scenario &scenario)
{
    const auto &q = scenario.near_node();
    const double half = 0.5 * scenario.geometry().length_z();
    const double rc = q.range() * std::cos(q.zenith()), rs = q.range() * std::sin(q.zenith());
    return {std::atan((half + rc) / rs), std::atan((half - rc) / rs)};
}

SnrEstimate snr_ula_closed(const Scenario &scenario)
{
    SnrEstimate est{0.0, ModelTag::UlaClosed, {}};
    require_ula_regime(scenario, "ula-closed", est);
    const auto [a1, a2] = ula_angles(scenario);
    const double span = ellip_f_param2_signed(0.5 * a1) + ellip_f_param2_signed(0.5 * a2);
    est.value = 0.25 * ula_prefactor(scenario) * span * span;
    return est;
}

SnrEstimate snr_ula_asymptotic(const Scenario &scenario)
{
    SnrEstimate est{0.0, ModelTag::UlaAsymptotic, {}};
    require_ula_regime(scenario, "ula-asymptotic", est);
    const double f = ellip_f_param2(kPi / 4.0);
    est.value = ula_prefactor(scenario) * f * f;
    return est;
}

SnrEstimate snr_upw(const Scenario &scenario, std::optional<UpwConfig> upw)
{
    const UpwConfig cfg = upw.value_or(UpwConfig::far_field_default(scenario));
    if (!(cfg.beta0_squared > 0.0) || !std::isfinite(cfg.beta0_squared))
        throw ValidationError("beta0^2 must be finite and positive");
    const double m = static_cast<double>(scenario.geometry().element_count());
    const double rq = scenario.tx().range(), rp = scenario.rx().range();
    return {cfg.beta0_squared * scenario.transmit_snr() * m * m / (rq * rq * rp * rp), ModelTag::Upw, {}};
}

} // namespace xlirs
