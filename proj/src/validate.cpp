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

#include "xlirs/validate.hpp"
#include "xlirs/channel.hpp"
#include "xlirs/errors.hpp"
#include "xlirs/elliptic.hpp"
#include "xlirs/harness.hpp"
#include "xlirs/presets.hpp"
#include "xlirs/quadrature.hpp"
#include "xlirs/snr_models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace xlirs::harness
{

namespace
{
using std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

CheckResult check(std::string tag, std::string name, double measured, double threshold, std::string detail = {})
{
    return {std::move(tag), std::move(name), measured <= threshold, measured, threshold, std::move(detail)};
}

// Random odd grid and two nodes with Psi > 0.1.
Scenario random_scenario(std::mt19937_64 &rng, std::int64_t max_half, double r_lo, double r_hi)
{
    std::uniform_int_distribution<std::int64_t> half(0, max_half);
    std::uniform_real_distribution<double> range(r_lo, r_hi), zen(0.35, pi - 0.35), az(-1.2, 1.2);
    auto node = [&] {
        for (;;)
        {
            NodePosition n(range(rng), zen(rng), az(rng));
            if (n.dir_x() > 0.1)
                return n;
        }
    };
    const auto geom = presets::reference_geometry(2 * half(rng) + 1, 2 * half(rng) + 1);
    const auto tx = node();
    const auto rx = node();
    return Scenario(geom, tx, rx, 1e9);
}

void elliptic_checks(std::vector<CheckResult> &out)
{
    const double f = ellip_f(pi / 4, 2.0);
    out.push_back(check("elliptic", "[F(pi/4|2)]^2 = 1.7188", std::abs(f * f - 1.7188), 1e-3, "value " + fmt(f * f)));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, pi / 4);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i)
    {
        const double t = u(rng);
        const double lhs = ellip_f(t, 2.0) * std::numbers::sqrt2;
        const double rhs = ellip_f(std::asin(std::min(1.0, std::numbers::sqrt2 * std::sin(t))), 0.5);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    out.push_back(check("elliptic", "reciprocal-parameter reduction", worst, 1e-10));

    QuadSpec tight{1e-13, 30, 15};
    std::uniform_real_distribution<double> uk(-3.0, 3.0), ut(0.0, 1.0);
    worst = 0.0;
    for (int i = 0; i < 50; ++i)
    {
        const double k = uk(rng);
        const double limit = k > 1.0 ? std::asin(1.0 / std::sqrt(k)) - 1e-3 : 1.4;
        const double t = ut(rng) * limit;
        const auto q = integrate_1d([&](double b) { return 1.0 / std::sqrt(1.0 - k * std::sin(b) * std::sin(b)); },
                                    0.0, t, tight);
        if (t > 0.0)
            worst = std::max(worst, rel(ellip_f(t, k), q.value));
    }
    out.push_back(check("elliptic", "F(theta|k) vs direct quadrature", worst, 1e-9));

    const auto kq = integrate_1d([](double b) { return 1.0 / std::sqrt(1.0 - 0.5 * std::sin(b) * std::sin(b)); }, 0.0,
                                 pi / 2, tight);
    out.push_back(check("elliptic", "K(1/2) AGM vs quadrature", rel(ellip_k_complete(0.5), kq.value), 1e-12));
}

void quadrature_checks(std::vector<CheckResult> &out)
{
    struct Case
    {
        std::function<double(double)> f;
        double a, b, exact;
    };
    const std::vector<Case> cases = {
        {[](double x) { return x * x; }, 0.0, 1.0, 1.0 / 3.0},
        {[](double x) { return std::sin(x); }, 0.0, pi, 2.0},
        {[](double x) { return std::exp(x); }, 0.0, 3.0, std::exp(3.0) - 1.0},
        {[](double x) { return 1.0 / (1.0 + x * x); }, -50.0, 50.0, 2.0 * std::atan(50.0)},
        {[](double x) { return std::pow(1.0 + x * x, -0.75); }, 0.0, 100.0, 0.0},
        {[](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, std::sin(40.0) / 40.0},
    };
    int honest = 0, total = 0;
    double worst = 0.0;
    for (const auto &c : cases)
    {
        if (c.exact == 0.0)
            continue;
        for (double tol : {1e-6, 1e-9, 1e-12})
        {
            const auto r = integrate_1d(c.f, c.a, c.b, {tol, 30, 15});
            const double err = std::abs(r.value - c.exact);
            ++total;
            honest += err <= r.error_estimate + 1e-15 * std::abs(c.exact);
            worst = std::max(worst, err / std::abs(c.exact) / tol);
        }
    }
    out.push_back(check("quadrature", "error estimate bounds true error", static_cast<double>(total - honest), 0.0,
                        std::to_string(honest) + "/" + std::to_string(total) + " honest"));
    out.push_back(check("quadrature", "true error within tolerance", worst, 1.0));
}

void symmetry_checks(std::vector<CheckResult> &out, int threads)
{
    std::mt19937_64 rng(21);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i)
    {
        const auto s = random_scenario(rng, 20, 1.0, 60.0);
        worst = std::max(worst, rel(snr_exact_sum(s, threads).value, snr_exact_sum(s.swapped(), threads).value));
    }
    out.push_back(check("symmetry", "tx/rx exchange, exact sum", worst, 1e-12));

    worst = 0.0;
    for (int i = 0; i < 10; ++i)
    {
        const auto s = random_scenario(rng, 20, 5.0, 60.0);
        worst = std::max(worst, rel(snr_integral_upa(s).value, snr_integral_upa(s.swapped()).value));
    }
    out.push_back(check("symmetry", "tx/rx exchange, surface integral", worst, 1e-12));
}

void dominance_checks(std::vector<CheckResult> &out)
{
    const Scenario s(presets::reference_geometry(3, 3), NodePosition(3.0, 1.1, 0.4), NodePosition(7.0, 2.0, -0.3),
                     1e9);
    const double best = snr_exact_sum(s, 1).value;
    const double aligned = snr_with_phases(s, optimal_phases(s)).value;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i)
    {
        std::vector<double> ph(9);
        for (auto &v : ph)
            v = u(rng);
        worst = std::max(worst, snr_with_phases(s, PhaseProfile(3, 3, ph)).value / best - 1.0);
    }
    out.push_back(check("dominance", "random phase profiles never beat the exact sum", std::max(0.0, worst), 1e-12));
    out.push_back(check("dominance", "optimal phases reach the exact sum", rel(aligned, best), 1e-12));
}

void bounds_checks(std::vector<CheckResult> &out)
{
    std::mt19937_64 rng(41);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
    {
        const auto s = random_scenario(rng, 100, 2.0, 30.0);
        const auto b = snr_bounds_general(s);
        const double mid = snr_integral_upa(s).value;
        worst = std::max({worst, b.lower.value / mid - 1.0, mid / b.upper.value - 1.0});
    }
    out.push_back(check("bounds", "disk bounds sandwich the surface integral", std::max(0.0, worst), 0.0));

    worst = 0.0;
    for (double side : {1.0, 5.0, 20.0})
    {
        const auto s = presets::boresight_square(side);
        const auto general = snr_bounds_general(s);
        const auto closed = std::get<BoundsPair>(snr_boresight(s));
        worst = std::max({worst, rel(closed.lower.value, general.lower.value),
                          rel(closed.upper.value, general.upper.value)});
    }
    out.push_back(check("bounds", "boresight closed form vs polar quadrature", worst, 1e-2));
}

void sum_integral_checks(std::vector<CheckResult> &out)
{
    std::mt19937_64 rng(51);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i)
    {
        const auto s = random_scenario(rng, 100, 30.0, 300.0);
        worst = std::max(worst, rel(snr_integral_upa(s).value, snr_exact_sum(s, 1).value));
    }
    out.push_back(check("sum-integral", "surface integral vs exact sum (eps < 1e-3)", worst, 1e-3));
}

void closed_form_checks(std::vector<CheckResult> &out)
{
    double worst = 0.0;
    for (auto [ly, lz, r] : {std::tuple{2.0, 2.0, 1.0}, {5.0, 3.0, 10.0}, {40.0, 10.0, 7.0}})
    {
        const auto q = integrate_rect_2d(
            [r = r](double y, double z) { return std::pow(1.0 + (y * y + z * z) / (r * r), -1.5); },
            {-ly / 2, ly / 2}, {-lz / 2, lz / 2}, {1e-12, 30, 15});
        const double a = ly / (2 * r), b = lz / (2 * r);
        const double closed = 4 * r * r * std::atan(a * b / std::sqrt(a * a + b * b + 1.0));
        worst = std::max(worst, rel(q.value, closed));
    }
    out.push_back(check("closed-forms", "equal-range rectangle integral vs arctan form", worst, 1e-8));

    worst = 0.0;
    for (double lz : {2.5, 25.0, 250.0})
    {
        const auto s = presets::line_array(lz, 1000.0);
        const auto &q = s.near_node();
        const auto &p = s.far_node();
        const double rho = s.distance_ratio(), ct = std::cos(q.zenith()), cp = std::cos(p.zenith());
        const double h = s.geometry().length_z() / (2 * q.range());
        const auto direct = integrate_1d(
            [&](double t) {
                return q.range() *
                       std::pow((1 - 2 * t * ct + t * t) * (1 - 2 * rho * t * cp + rho * rho * t * t), -0.75);
            },
            -h, h, {1e-12, 30, 15});
        const auto [a1, a2] = ula_angles(s);
        const double closed = 2 * q.range() / std::sqrt(std::sin(q.zenith())) *
                              (ellip_f_param2_signed(a1 / 2) + ellip_f_param2_signed(a2 / 2));
        worst = std::max(worst, rel(closed, direct.value));
    }
    out.push_back(check("closed-forms", "line integral vs elliptic form at rho = 0.01", worst, 1e-2));
}

void ula_checks(std::vector<CheckResult> &out)
{
    double worst = 0.0;
    for (double lz : {0.5, 10.0, 100.0})
    {
        const auto s = presets::line_array(lz);
        const auto &g = s.geometry();
        // Surface integral with the y extent collapsed to one element (y = 0, dy = d).
        const auto line = integrate_1d([&](double z) { return surface_kernel(s, 0.0, z); }, -g.length_z() / 2,
                                       g.length_z() / 2, {1e-12, 30, 15});
        const double collapsed = integral_prefactor(s, 4) * std::pow(g.spacing() * line.value, 2);
        worst = std::max(worst, rel(collapsed, snr_ula_integral(s, {1e-12, 30, 15}).value));
    }
    out.push_back(check("ula", "surface integral collapses to the line integral", worst, 1e-10));

    worst = 0.0;
    for (double lz : {0.25, 2.5, 25.0, 250.0})
    {
        const auto s = presets::line_array(lz, 1000.0);
        worst = std::max(worst, rel(snr_ula_closed(s).value, snr_ula_integral(s).value));
    }
    out.push_back(check("ula", "closed form vs line integral at rho = 0.01", worst, 1e-2));
}

void upw_checks(std::vector<CheckResult> &out, double beta0_scale)
{
    const auto s = presets::boresight_square(0.1);
    const double exact = snr_exact_sum(s, 1).value;
    auto cfg = UpwConfig::far_field_default(s);
    cfg.beta0_squared *= beta0_scale;
    const double dev = std::abs(snr_upw(s, cfg).db() - to_db(exact));
    out.push_back(check("upw", "plane-wave model matches the exact sum in the far field (dB)", dev, 0.01,
                        "deviation " + fmt(dev) + " dB"));
}

void determinism_checks(std::vector<CheckResult> &out)
{
    const auto s = presets::boresight_square(20.0);
    const double one = snr_exact_sum(s, 1).value;
    const double many = snr_exact_sum(s, 4).value;
    out.push_back(check("determinism", "exact sum bit-identical for 1 and 4 threads", one == many ? 0.0 : 1.0, 0.0));

    SweepSpec spec{presets::boresight_square(1.0), SweepVariable::SurfaceSize, {0.5, 1.0, 2.0, 5.0},
                   {Model::ExactSum, Model::Bounds, Model::Boresight, Model::Asymptotic, Model::Upw}, std::nullopt};
    const bool same = format_csv(run_sweep(spec, 1)) == format_csv(run_sweep(spec, 4));
    out.push_back(check("determinism", "sweep CSV bytes identical for 1 and 4 workers", same ? 0.0 : 1.0, 0.0));
}

bool wanted(const ValidationOptions &o, const std::string &tag)
{
    return o.tags.empty() || std::find(o.tags.begin(), o.tags.end(), tag) != o.tags.end();
}

} // namespace

std::vector<std::string> validation_tags()
{
    return {"elliptic", "quadrature", "symmetry", "dominance", "bounds",
            "sum-integral", "closed-forms", "ula", "upw", "determinism"};
}

std::vector<CheckResult> run_validation(const ValidationOptions &options)
{
    for (const auto &t : options.tags)
    {
        const auto known = validation_tags();
        if (std::find(known.begin(), known.end(), t) == known.end())
            throw ValidationError("unknown validation tag '" + t + "'");
    }
    std::vector<CheckResult> out;
    auto guarded = [&](const std::string &tag, const std::function<void()> &run) {
        if (!wanted(options, tag))
            return;
        try
        {
            run();
        }
        catch (const std::exception &e)
        {
            out.push_back({tag, "suite raised an error", false, 1.0, 0.0, e.what()});
        }
    };
    guarded("elliptic", [&] { elliptic_checks(out); });
    guarded("quadrature", [&] { quadrature_checks(out); });
    guarded("symmetry", [&] { symmetry_checks(out, options.threads); });
    guarded("dominance", [&] { dominance_checks(out); });
    guarded("bounds", [&] { bounds_checks(out); });
    guarded("sum-integral", [&] { sum_integral_checks(out); });
    guarded("closed-forms", [&] { closed_form_checks(out); });
    guarded("ula", [&] { ula_checks(out); });
    guarded("upw", [&] { upw_checks(out, options.beta0_scale); });
    guarded("determinism", [&] { determinism_checks(out); });
    return out;
}

std::string format_checks(const std::vector<CheckResult> &checks)
{
    std::ostringstream os;
    int failed = 0;
    for (const auto &c : checks)
    {
        char line[256];
        std::snprintf(line, sizeof line, "[%s] %-13s %-62s measured %-10.3g limit %.3g", c.passed ? "PASS" : "FAIL",
                      c.tag.c_str(), c.name.c_str(), c.measured, c.threshold);
        os << line;
        if (!c.detail.empty())
            os << "  (" << c.detail << ")";
        os << "\n";
        failed += !c.passed;
    }
    os << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return os.str();
}

} // namespace xlirs::harness
