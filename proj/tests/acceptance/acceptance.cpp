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

#include "xlirs/channel.hpp"
#include "xlirs/elliptic.hpp"
#include "xlirs/harness.hpp"
#include "xlirs/parallel.hpp"
#include "xlirs/presets.hpp"
#include "xlirs/quadrature.hpp"
#include "xlirs/snr_models.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>

namespace
{

using namespace xlirs;
using namespace xlirs::harness;
using std::numbers::pi;
using Clock = std::chrono::steady_clock;

struct Outcome
{
    bool passed;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string fmt(const char *f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

const std::vector<double> kSquareSides = {0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0};

NodePosition random_node(std::mt19937_64 &rng, double r_lo, double r_hi)
{
    std::uniform_real_distribution<double> r(r_lo, r_hi), t(0.35, pi - 0.35), p(-1.2, 1.2);
    for (;;)
    {
        NodePosition n(r(rng), t(rng), p(rng));
        if (n.dir_x() > 0.1)
            return n;
    }
}

Outcome elliptic_constant()
{
    const double f = ellip_f(pi / 4, 2.0);
    const double v = f * f;
    return {std::abs(v - 1.7188) <= 1e-3, "[F(pi/4|2)]^2 = " + fmt("%.10f", v) + " (target 1.7188 +- 1e-3)"};
}

Outcome sandwich()
{
    const auto t0 = Clock::now();
    bool ok = true;
    std::string worst;
    double tightest = INFINITY;
    for (double side : kSquareSides)
    {
        const auto s = presets::boresight_square(side);
        const auto b = snr_bounds_general(s);
        const double sum = snr_exact_sum(s).value;
        const bool strict = b.lower.value < sum && sum < b.upper.value;
        ok = ok && strict;
        const double margin = std::min(to_db(sum) - b.lower.db(), b.upper.db() - to_db(sum));
        if (margin < tightest)
        {
            tightest = margin;
            worst = "L=" + fmt("%g", side);
        }
    }
    const double t = seconds_since(t0);
    ok = ok && t <= 60.0;
    return {ok, "strict f(R1) < sum < f(R2) at all 8 sizes: " + std::string(ok ? "yes" : "no") +
                    "; tightest margin " + fmt("%.3f", tightest) + " dB at " + worst + "; " + fmt("%.1f", t) +
                    " s (limit 60 s)"};
}

Outcome saturation()
{
    const double oracle = 6243670.1289386851867; // mpmath, tests/oracles/oracles.py
    const double limit = snr_asymptotic_upa(presets::boresight_square(1.0)).value;
    bool monotone = true;
    double prev = 0.0, last = 0.0;
    for (double side : kSquareSides)
    {
        last = snr_exact_sum(presets::boresight_square(side)).value;
        monotone = monotone && last >= prev;
        prev = last;
    }
    const double gap = to_db(limit) - to_db(last);
    const bool oracle_ok = rel(limit, oracle) < 1e-12;
    return {monotone && oracle_ok && std::abs(gap) <= 0.5,
            "nondecreasing: " + std::string(monotone ? "yes" : "no") + "; asymptote " + fmt("%.4f", to_db(limit)) +
                " dB (oracle match " + (oracle_ok ? "yes" : "no") + "); sum at L=100 m " + fmt("%.4f", to_db(last)) +
                " dB; gap " + fmt("%.3f", gap) + " dB (limit 0.5)"};
}

Outcome sum_integral()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> half(0, 200);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i)
    {
        const auto geom = presets::reference_geometry(2 * half(rng) + 1, 2 * half(rng) + 1);
        // epsilon = d / r < 1e-3 needs r > 25 m
        const Scenario s(geom, random_node(rng, 25.5, 400.0), random_node(rng, 25.5, 400.0), 1e9);
        worst = std::max(worst, rel(snr_integral_upa(s).value, snr_exact_sum(s).value));
    }
    const double t = seconds_since(t0);
    return {worst < 1e-3 && t <= 120.0,
            "50 random scenarios, worst relative gap " + fmt("%.3e", worst) + " (limit 1e-3); " + fmt("%.1f", t) +
                " s (limit 120 s)"};
}

Outcome upw_regimes()
{
    const auto near = presets::boresight_square(0.1);
    const double far_gap = std::abs(snr_upw(near).db() - snr_exact_sum(near).db());
    const auto big = presets::boresight_square(50.0);
    const double over = snr_upw(big).db() - snr_exact_sum(big).db();
    return {far_gap < 0.01 && over > 20.0, "far field L=0.1 m: |UPW - sum| = " + fmt("%.5f", far_gap) +
                                               " dB (limit 0.01); L=50 m: UPW - sum = " + fmt("%.3f", over) +
                                               " dB (needs > 20)"};
}

Outcome oblique_callout()
{
    const auto s = presets::oblique_square(2.0);
    const double sum = snr_exact_sum(s).db();
    const double free_space = snr_upw(s, UpwConfig::free_space_reference(s.geometry().wavelength())).db() - sum;
    const double dflt = snr_upw(s).db() - sum;
    return {std::abs(free_space - 25.0) <= 3.0, "r_q = 2 m, beta0 = lambda/(4 pi): UPW - sum = " +
                                                    fmt("%.3f", free_space) + " dB (target 25 +- 3); default beta0: " +
                                                    fmt("%.3f", dflt) + " dB"};
}

Outcome ula_closed()
{
    const auto t0 = Clock::now();
    double closed_vs_integral = 0.0, vs_sum = 0.0;
    for (std::int64_t m : {11, 101, 1001, 10001, 100001})
    {
        const auto s = presets::line_array(static_cast<double>(m) * presets::kSpacing, 1000.0);
        const double c = snr_ula_closed(s).value, q = snr_ula_integral(s).value, e = snr_exact_sum(s).value;
        closed_vs_integral = std::max(closed_vs_integral, rel(c, q));
        vs_sum = std::max({vs_sum, rel(c, e), rel(q, e)});
    }
    return {closed_vs_integral < 1e-2 && vs_sum < 1e-2,
            "rho = 0.01, M up to 1e5: closed vs integral " + fmt("%.3e", closed_vs_integral) +
                ", worst vs sum " + fmt("%.3e", vs_sum) + " (limit 1e-2); " + fmt("%.2f", seconds_since(t0)) + " s"};
}

Outcome ula_asymptote()
{
    const auto s = presets::line_array(1e4 * 10.0);
    const double gap = snr_ula_closed(s).db() - snr_ula_asymptotic(s).db();
    return {std::abs(gap) <= 0.1, "L_z = 1e4 r_q: closed - asymptote = " + fmt("%.4f", gap) + " dB (limit 0.1)"};
}

Outcome closed_forms()
{
    double a_worst = 0.0;
    for (auto [ly, lz, r] : {std::tuple{2.0, 2.0, 1.0}, {5.0, 3.0, 10.0}, {40.0, 10.0, 7.0}, {100.0, 100.0, 10.0}})
    {
        const auto q = integrate_rect_2d(
            [r = r](double y, double z) { return std::pow(1.0 + (y * y + z * z) / (r * r), -1.5); },
            {-ly / 2, ly / 2}, {-lz / 2, lz / 2}, {1e-12, 30, 15});
        const double a = ly / (2 * r), b = lz / (2 * r);
        a_worst = std::max(a_worst, rel(q.value, 4 * r * r * std::atan(a * b / std::sqrt(a * a + b * b + 1.0))));
    }
    double b_worst = 0.0;
    for (double lz : {0.25, 2.5, 25.0, 250.0, 2500.0})
    {
        const auto s = presets::line_array(lz, 1000.0);
        const auto &q = s.near_node();
        const auto &p = s.far_node();
        const double rho = s.distance_ratio(), cq = std::cos(q.zenith()), cp = std::cos(p.zenith());
        const double h = s.geometry().length_z() / (2 * q.range());
        const auto direct = integrate_1d(
            [&](double t) {
                return q.range() * std::pow((1 - 2 * t * cq + t * t) * (1 - 2 * rho * t * cp + rho * rho * t * t), -0.75);
            },
            -h, h, {1e-12, 30, 15});
        const auto [a1, a2] = ula_angles(s);
        const double closed =
            2 * q.range() / std::sqrt(std::sin(q.zenith())) * (ellip_f_param2_signed(a1 / 2) + ellip_f_param2_signed(a2 / 2));
        b_worst = std::max(b_worst, rel(closed, direct.value));
    }
    return {a_worst <= 1e-8 && b_worst <= 1e-2, "equal-range arctan form " + fmt("%.2e", a_worst) +
                                                    " (limit 1e-8); line elliptic form at rho = 0.01 " +
                                                    fmt("%.2e", b_worst) + " (limit 1e-2)"};
}

Outcome properties()
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> half(0, 40);
    double sym = 0.0;
    for (int i = 0; i < 100; ++i)
    {
        const Scenario s(presets::reference_geometry(2 * half(rng) + 1, 2 * half(rng) + 1), random_node(rng, 1.0, 80.0),
                         random_node(rng, 1.0, 80.0), 1e9);
        sym = std::max(sym, rel(snr_exact_sum(s).value, snr_exact_sum(s.swapped()).value));
    }

    const Scenario small(presets::reference_geometry(3, 3), NodePosition(3.0, 1.1, 0.4),
                         NodePosition(7.0, 2.0, -0.3), 1e9);
    const double best = snr_exact_sum(small).value;
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    int dominated = 0;
    for (int i = 0; i < 100; ++i)
    {
        std::vector<double> ph(9);
        for (auto &v : ph)
            v = u(rng);
        dominated += snr_with_phases(small, PhaseProfile(3, 3, ph)).value <= best * (1 + 1e-12);
    }

    std::uniform_real_distribution<double> ut(0.0, pi / 4);
    double reduction = 0.0;
    for (int i = 0; i < 100; ++i)
    {
        const double t = ut(rng);
        reduction = std::max(reduction, std::abs(ellip_f(t, 2.0) * std::numbers::sqrt2 -
                                                 ellip_f(std::asin(std::min(1.0, std::numbers::sqrt2 * std::sin(t))), 0.5)));
    }

    const SweepSpec spec{presets::boresight_square(1.0), SweepVariable::SurfaceSize, kSquareSides,
                         all_models(), std::nullopt};
    const bool csv_same = format_csv(run_sweep(spec, 1)) == format_csv(run_sweep(spec, 4));

    const bool ok = sym <= 1e-12 && dominated == 100 && reduction <= 1e-10 && csv_same;
    return {ok, "symmetry " + fmt("%.2e", sym) + " (limit 1e-12); dominance " + std::to_string(dominated) +
                    "/100; reduction " + fmt("%.2e", reduction) + " (limit 1e-10); CSV bytes serial == parallel: " +
                    (csv_same ? "yes" : "no")};
}

Outcome performance()
{
    const auto s6 = presets::boresight_square(1001 * presets::kSpacing);  // 1001^2 ~ 1.0e6
    const auto s7 = presets::boresight_square(3163 * presets::kSpacing);  // 3163^2 ~ 1.0e7
    auto time = [](const Scenario &s) {
        const auto t0 = Clock::now();
        volatile double v = snr_exact_sum(s).value;
        (void)v;
        return seconds_since(t0);
    };
    const double t6 = time(s6), t7 = time(s7);
    return {t6 < 2.0 && t7 < 20.0, "M = " + std::to_string(s6.geometry().element_count()) + ": " + fmt("%.3f", t6) +
                                       " s (limit 2); M = " + std::to_string(s7.geometry().element_count()) + ": " +
                                       fmt("%.3f", t7) + " s (limit 20); " + std::to_string(worker_threads()) +
                                       " worker(s)"};
}

} // namespace

int main(int argc, char **argv)
{
    const std::map<int, std::pair<std::string, std::function<Outcome()>>> criteria = {
        {1, {"elliptic constant", elliptic_constant}},
        {2, {"disk-bound sandwich on the square sweep", sandwich}},
        {3, {"saturation toward the asymptote", saturation}},
        {4, {"sum vs surface integral", sum_integral}},
        {5, {"plane-wave far-field agreement and divergence", upw_regimes}},
        {6, {"plane-wave gap at r_q = 2 m", oblique_callout}},
        {7, {"line-array closed form", ula_closed}},
        {8, {"line-array asymptote", ula_asymptote}},
        {9, {"closed-form integral identities", closed_forms}},
        {10, {"property suites", properties}},
        {11, {"exact-sum performance", performance}},
    };

    CLI::App app{"Acceptance criteria"};
    std::vector<int> only;
    app.add_option("--criterion,-c", only, "Run only these criteria (1-11)")->check(CLI::Range(1, 11));
    CLI11_PARSE(app, argc, argv);

    int failed = 0, ran = 0;
    for (const auto &[id, entry] : criteria)
    {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end())
            continue;
        Outcome out{false, ""};
        try
        {
            out = entry.second();
        }
        catch (const std::exception &e)
        {
            out = {false, std::string("error: ") + e.what()};
        }
        std::printf("[%s] criterion %2d  %-46s %s\n", out.passed ? "PASS" : "FAIL", id, entry.first.c_str(),
                    out.detail.c_str());
        std::fflush(stdout);
        ++ran;
        failed += !out.passed;
    }
    std::printf("%d/%d criteria passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}
