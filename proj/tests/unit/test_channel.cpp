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
#include "xlirs/errors.hpp"
#include "xlirs/kernels.hpp"
#include "xlirs/parallel.hpp"
#include "xlirs/presets.hpp"
#include "xlirs/summation.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

using namespace xlirs;
using std::numbers::pi;

namespace
{

constexpr double kArea = 1.5625e-4;

Scenario boresight(std::int64_t m, double pbar = 1e9)
{
    return Scenario(presets::reference_geometry(m, m), NodePosition(10.0, pi / 2, 0.0),
                    NodePosition(100.0, pi / 2, 0.0), pbar);
}

Scenario oblique(std::int64_t my, std::int64_t mz)
{
    return Scenario(presets::reference_geometry(my, mz), NodePosition(3.0, 1.1, 0.4), NodePosition(7.0, 2.0, -0.3),
                    1e9);
}

double wrap(double a)
{
    a = std::fmod(a, 2 * pi);
    if (a > pi)
        a -= 2 * pi;
    if (a < -pi)
        a += 2 * pi;
    return a;
}

} // namespace

TEST(ElementGain, CenterOnBoresight)
{
    const auto g = presets::reference_geometry(3, 3);
    EXPECT_NEAR(element_gain(NodePosition(10.0, pi / 2, 0.0), g, 0, 0), kArea / (4 * pi * 100), 1e-22);
    EXPECT_NEAR(element_gain(NodePosition(10.0, pi / 2, 0.0), g, 0, 0), 1.2434e-7, 1e-11);
}

TEST(ElementGain, CenterIsUnbracketed)
{
    const auto g = presets::reference_geometry(3, 3);
    const NodePosition n(4.0, 1.0, 0.7);
    EXPECT_DOUBLE_EQ(element_gain(n, g, 0, 0), kArea * n.dir_x() / (4 * pi * 16.0));
}

TEST(ElementGain, MirrorSymmetry)
{
    const auto g = presets::reference_geometry(11, 11);
    const NodePosition n(2.0, 1.2, 0.5);
    for (int iy = -5; iy <= 5; ++iy)
        for (int iz = -5; iz <= 5; ++iz)
            EXPECT_NEAR(element_gain(n, g, iy, iz) / element_gain(n.mirrored(), g, -iy, -iz), 1.0, 1e-13);
    EXPECT_THROW(element_gain(n, g, 6, 0), ValidationError);
}

TEST(ChannelVector, LayoutAndModulus)
{
    const auto g = presets::reference_geometry(3, 3);
    const NodePosition n(10.0, pi / 2, 0.0);
    const auto h = channel_vector(n, g);
    ASSERT_EQ(h.size(), 9u);
    EXPECT_NEAR(std::norm(h[4]), element_gain(n, g, 0, 0), 1e-22);
    EXPECT_NEAR(std::arg(h[4]), 0.0, 1e-12); // 80 whole wavelengths
    // Row-major, i_z outer: entry 1 is (i_y = 0, i_z = -1), entry 3 is (i_y = -1, i_z = 0).
    const NodePosition o(5.0, 1.0, 0.3);
    const auto v = channel_vector(o, g);
    EXPECT_NEAR(std::norm(v[1]), element_gain(o, g, 0, -1), 1e-20);
    EXPECT_NEAR(std::norm(v[3]), element_gain(o, g, -1, 0), 1e-20);
}

TEST(ChannelVector, RejectsHugeGrids)
{
    const auto g = presets::reference_geometry(1001, 1001);
    EXPECT_THROW(channel_vector(NodePosition(10.0, 1.0, 0.0), g), ValidationError);
}

TEST(OptimalPhases, AlignsEveryComposite)
{
    const auto s = oblique(7, 5);
    const auto theta = optimal_phases(s);
    const auto h = channel_vector(s.tx(), s.geometry());
    const auto g = channel_vector(s.rx(), s.geometry());
    for (std::size_t k = 0; k < h.size(); ++k)
    {
        EXPECT_NEAR(wrap(std::arg(h[k]) + std::arg(g[k]) + theta.values()[k]), 0.0, 1e-9);
        EXPECT_GE(theta.values()[k], 0.0);
        EXPECT_LT(theta.values()[k], 2 * pi);
    }
}

TEST(OptimalPhases, SwapInvariantAndZeroAtCenter)
{
    const auto s = oblique(5, 5);
    EXPECT_EQ(optimal_phases(s).values(), optimal_phases(s.swapped()).values());
    EXPECT_NEAR(wrap(optimal_phases(boresight(3)).at(0, 0)), 0.0, 1e-9);
}

TEST(SnrWithPhases, OptimalEqualsExactSum)
{
    const auto s = oblique(9, 7);
    EXPECT_NEAR(snr_with_phases(s, optimal_phases(s)).value / snr_exact_sum(s).value, 1.0, 1e-12);
}

TEST(SnrWithPhases, SingleElementIgnoresPhase)
{
    const auto s = oblique(1, 1);
    const double ref = snr_with_phases(s, PhaseProfile(1, 1, {0.0})).value;
    for (double t : {0.3, 1.7, 4.0, 6.2})
        EXPECT_NEAR(snr_with_phases(s, PhaseProfile(1, 1, {t})).value / ref, 1.0, 1e-14);
}

TEST(SnrWithPhases, DominanceOverRandomProfiles)
{
    const auto s = oblique(3, 3);
    const double best = snr_exact_sum(s).value;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    for (int i = 0; i < 100; ++i)
    {
        std::vector<double> ph(9);
        for (auto &v : ph)
            v = u(rng);
        EXPECT_LE(snr_with_phases(s, PhaseProfile(3, 3, ph)).value, best * (1 + 1e-12));
    }
}

TEST(SnrWithPhases, DimensionMismatch)
{
    EXPECT_THROW(snr_with_phases(oblique(3, 3), PhaseProfile(3, 5, std::vector<double>(15, 0.0))), ValidationError);
    EXPECT_THROW(PhaseProfile(3, 3, std::vector<double>(8, 0.0)), ValidationError);
}

TEST(ExactSum, SingleElementHandValue)
{
    const double a = kArea / (4 * pi * 100), b = kArea / (4 * pi * 1e4);
    const auto s = boresight(1);
    EXPECT_NEAR(snr_exact_sum(s).value / (a * b * 1e9), 1.0, 1e-13);
    EXPECT_NEAR(snr_exact_sum(s).value, 1.546e-7, 1e-10);
}

TEST(ExactSum, SwapSymmetry)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> r(1.0, 50.0), t(0.4, pi - 0.4), p(-1.1, 1.1);
    for (int i = 0; i < 20; ++i)
    {
        const Scenario s(presets::reference_geometry(31, 17), NodePosition(r(rng), t(rng), p(rng)),
                         NodePosition(r(rng), t(rng), p(rng)), 1e9);
        EXPECT_NEAR(snr_exact_sum(s).value / snr_exact_sum(s.swapped()).value, 1.0, 1e-12);
    }
}

TEST(ExactSum, MonotoneInAperture)
{
    double prev = 0.0;
    for (std::int64_t m = 1; m <= 41; m += 2)
    {
        const double v = snr_exact_sum(oblique(m, m)).value;
        EXPECT_GE(v, prev);
        prev = v;
    }
}

TEST(ExactSum, LinearInTransmitSnr)
{
    const auto s = oblique(21, 21);
    const double base = snr_exact_sum(s).value;
    EXPECT_EQ(snr_exact_sum(s.with_transmit_snr(s.transmit_snr() * 8.0)).value, base * 8.0);
    EXPECT_NEAR(snr_exact_sum(s.with_transmit_snr(s.transmit_snr() * 3.0)).value / (3.0 * base), 1.0, 1e-15);
}

TEST(Kernels, ChunkedMatchesReference)
{
    for (auto [my, mz] : {std::pair<std::int64_t, std::int64_t>{1, 1}, {1, 9999}, {201, 201}, {301, 91}})
    {
        const auto s = oblique(my, mz);
        const double ref = kernels::amplitude_sum_reference(s);
        EXPECT_NEAR(kernels::amplitude_sum_chunked(s, 1) / ref, 1.0, 1e-12) << my << "x" << mz;
    }
}

TEST(Kernels, BitIdenticalAcrossThreadCounts)
{
    const auto s = boresight(1001);
    const double one = kernels::amplitude_sum_chunked(s, 1);
    for (int t : {2, 3, 4, 8})
        EXPECT_EQ(kernels::amplitude_sum_chunked(s, t), one) << t << " threads";
    EXPECT_EQ(kernels::amplitude_sum_chunked(s, 1), one); // run-to-run
}

TEST(Parallel, EnvironmentCapsWorkers)
{
    ::setenv("XLIRS_THREADS", "3", 1);
    EXPECT_EQ(worker_threads(), 3);
    EXPECT_EQ(worker_threads(2), 2);
    ::setenv("XLIRS_THREADS", "0", 1);
    EXPECT_GE(worker_threads(), 1);
    ::unsetenv("XLIRS_THREADS");
    EXPECT_GE(worker_threads(), 1);
}

TEST(Summation, CompensationRecoversCancelledDigits)
{
    CompensatedSum acc;
    double naive = 1.0;
    acc.add(1.0);
    for (int i = 0; i < 1000; ++i)
    {
        acc.add(1e-16);
        naive += 1e-16;
    }
    acc.add(-1.0);
    naive -= 1.0;
    EXPECT_EQ(naive, 0.0);
    EXPECT_NEAR(acc.value() / 1e-13, 1.0, 1e-12);
}

TEST(Summation, PairwiseMergeMatchesSerial)
{
    std::vector<CompensatedSum> parts(37);
    CompensatedSum serial;
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto &p : parts)
        for (int i = 0; i < 100; ++i)
        {
            const double v = u(rng) * std::pow(10.0, 8 * u(rng));
            p.add(v);
            serial.add(v);
        }
    EXPECT_NEAR(pairwise_merge(parts).value(), serial.value(), 1e-15 * std::abs(serial.value()) + 1e-300);
    EXPECT_EQ(pairwise_merge(std::span<const CompensatedSum>{}).value(), 0.0);
}
