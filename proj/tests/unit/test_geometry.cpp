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

#include "xlirs/errors.hpp"
#include "xlirs/geometry.hpp"
#include "xlirs/presets.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace xlirs;
using std::numbers::pi;

namespace
{

IrsGeometry grid(std::int64_t my, std::int64_t mz) { return presets::reference_geometry(my, mz); }

double direct_distance(const NodePosition &n, const IrsGeometry &g, std::int64_t iy, std::int64_t iz)
{
    return norm(spherical_to_cartesian(n) - element_position(g, iy, iz));
}

} // namespace

TEST(SphericalToCartesian, BoresightAxis)
{
    const auto p = spherical_to_cartesian(NodePosition(10.0, pi / 2, 0.0));
    EXPECT_NEAR(p.x, 10.0, 1e-14);
    EXPECT_NEAR(p.y, 0.0, 1e-14);
    EXPECT_NEAR(p.z, 0.0, 1e-14);
}

TEST(SphericalToCartesian, ExactTrigValues)
{
    const NodePosition n(1.0, pi / 3, pi / 6);
    const auto p = spherical_to_cartesian(n);
    EXPECT_NEAR(p.x, 0.75, 1e-15);
    EXPECT_NEAR(p.y, std::sqrt(3.0) / 4, 1e-15);
    EXPECT_NEAR(p.z, 0.5, 1e-15);
    EXPECT_NEAR(n.dir_x(), 0.75, 1e-15);
}

TEST(SphericalToCartesian, AzimuthEdge)
{
    const auto p = spherical_to_cartesian(NodePosition(2.0, pi / 2, pi / 2 - 1e-9));
    EXPECT_NEAR(p.x, 0.0, 1e-8);
    EXPECT_THROW(NodePosition(2.0, pi / 2, pi / 2), ValidationError);
    EXPECT_THROW(NodePosition(2.0, pi / 2, -pi / 2), ValidationError);
}

TEST(NodePosition, RejectsDegenerateAngles)
{
    for (double theta : {0.0, pi, -0.1, 4.0})
    {
        try
        {
            NodePosition(1.0, theta, 0.0);
            FAIL() << "accepted zenith " << theta;
        }
        catch (const ValidationError &e)
        {
            EXPECT_STREQ(e.what(), "zenith angle must lie in (0, π)");
        }
    }
    EXPECT_THROW(NodePosition(0.0, 1.0, 0.0), ValidationError);
    EXPECT_THROW(NodePosition(-1.0, 1.0, 0.0), ValidationError);
    EXPECT_THROW(NodePosition(std::nan(""), 1.0, 0.0), ValidationError);
}

TEST(IrsGeometry, RejectsEvenAndZeroCounts)
{
    EXPECT_THROW(grid(2, 3), ValidationError);
    EXPECT_THROW(grid(3, 4), ValidationError);
    EXPECT_THROW(grid(0, 1), ValidationError);
    EXPECT_THROW(grid(-1, 1), ValidationError);
    EXPECT_NO_THROW(grid(1, 1));
}

TEST(IrsGeometry, SpacingAndAreaLimits)
{
    EXPECT_THROW(IrsGeometry(3, 3, 0.1, 1e-4, 0.125), ValidationError);   // d > lambda/2
    EXPECT_THROW(IrsGeometry(3, 3, 0.01, 1e-3, 0.125), ValidationError);  // sqrt(A) > d
    EXPECT_NO_THROW(IrsGeometry(3, 3, 0.0625, 0.0625 * 0.0625, 0.125)); // both limits attained
}

TEST(IrsGeometry, DerivedQuantities)
{
    const auto g = grid(201, 41);
    EXPECT_EQ(g.element_count(), 201 * 41);
    EXPECT_EQ(g.half_y(), 100);
    EXPECT_DOUBLE_EQ(g.length_y(), 201 * 0.025);
    EXPECT_DOUBLE_EQ(g.occupation_ratio(), 0.25);
    EXPECT_TRUE(g.contains(100, -20));
    EXPECT_FALSE(g.contains(101, 0));
}

TEST(ElementPosition, CenterAndArithmetic)
{
    const auto g = grid(5, 5);
    const auto c = element_position(g, 0, 0);
    EXPECT_EQ(c.x, 0.0);
    EXPECT_EQ(c.y, 0.0);
    EXPECT_EQ(c.z, 0.0);
    const auto p = element_position(g, 1, 2);
    EXPECT_DOUBLE_EQ(p.y, 0.025);
    EXPECT_DOUBLE_EQ(p.z, 0.05);
}

TEST(ElementPosition, IndexOutOfRange)
{
    const auto g = grid(3, 3);
    EXPECT_THROW(element_position(g, 2, 0), ValidationError);
    EXPECT_THROW(element_distance(NodePosition(1.0, 1.0, 0.0), g, 0, -2), ValidationError);
}

TEST(ElementDistance, Examples)
{
    const auto g = grid(3, 3);
    const NodePosition n(10.0, pi / 2, 0.0);
    EXPECT_DOUBLE_EQ(element_distance(n, g, 0, 0), 10.0);
    EXPECT_NEAR(element_distance(n, g, 1, 0), 10.0 * std::sqrt(1.0 + 6.25e-6), 1e-12);
    EXPECT_NEAR(element_distance(n, g, 1, 0), 10.00003125, 1e-8);
}

class RandomNodes : public ::testing::Test
{
protected:
    std::mt19937_64 rng{7};
    NodePosition node()
    {
        std::uniform_real_distribution<double> r(0.5, 500.0), t(0.05, pi - 0.05), p(-1.5, 1.5);
        return {r(rng), t(rng), p(rng)};
    }
    std::int64_t index(std::int64_t half)
    {
        return std::uniform_int_distribution<std::int64_t>(-half, half)(rng);
    }
};

TEST_F(RandomNodes, ClosedFormMatchesDirectNorm)
{
    const auto g = grid(401, 401);
    for (int i = 0; i < 1000; ++i)
    {
        const auto n = node();
        const auto iy = index(200), iz = index(200);
        const double direct = direct_distance(n, g, iy, iz);
        EXPECT_NEAR(element_distance(n, g, iy, iz) / direct, 1.0, 1e-12);
    }
}

TEST_F(RandomNodes, NeverCloserThanProjection)
{
    const auto g = grid(401, 401);
    for (int i = 0; i < 1000; ++i)
    {
        const auto n = node();
        EXPECT_GE(element_distance(n, g, index(200), index(200)), n.range() * n.dir_x() * (1 - 1e-14));
    }
}

TEST_F(RandomNodes, SignPairSymmetry)
{
    const auto g = grid(101, 101);
    for (int i = 0; i < 1000; ++i)
    {
        const auto n = node();
        const auto m = n.mirrored();
        EXPECT_NEAR(m.dir_y(), -n.dir_y(), 1e-15);
        EXPECT_NEAR(m.dir_z(), -n.dir_z(), 1e-15);
        const auto iy = index(50), iz = index(50);
        EXPECT_NEAR(element_distance(n, g, iy, iz) / element_distance(m, g, -iy, -iz), 1.0, 1e-13);
    }
}
