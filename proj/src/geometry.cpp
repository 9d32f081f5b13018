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

#include "xlirs/geometry.hpp"
#include "xlirs/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace xlirs
{

namespace
{
constexpr double kRelSlack = 1e-12;

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }
} // namespace

void require_index(const IrsGeometry &geom, std::int64_t i_y, std::int64_t i_z)
{
    if (!geom.contains(i_y, i_z))
        throw ValidationError("element index (" + std::to_string(i_y) + ", " + std::to_string(i_z) +
                              ") out of range for a " + std::to_string(geom.m_y()) + "x" +
                              std::to_string(geom.m_z()) + " grid");
}

double norm(const Point3 &p) { return std::hypot(p.x, p.y, p.z); }

Point3 operator-(const Point3 &a, const Point3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

IrsGeometry::IrsGeometry(std::int64_t m_y, std::int64_t m_z, double spacing, double element_area, double wavelength)
    : m_y_(m_y), m_z_(m_z), spacing_(spacing), element_area_(element_area), wavelength_(wavelength)
{
    if (m_y < 1 || m_z < 1)
        throw ValidationError("element counts must be >= 1 (got m_y=" + std::to_string(m_y) +
                              ", m_z=" + std::to_string(m_z) + ")");
    if (m_y % 2 == 0 || m_z % 2 == 0)
        throw ValidationError("element counts must be odd (got m_y=" + std::to_string(m_y) +
                              ", m_z=" + std::to_string(m_z) + ")");
    if (!finite_positive(spacing) || !finite_positive(element_area) || !finite_positive(wavelength))
        throw ValidationError("spacing, element area and wavelength must be finite and positive");
    if (spacing > 0.5 * wavelength * (1.0 + kRelSlack))
        throw ValidationError("element spacing must not exceed half a wavelength");
    if (std::sqrt(element_area) > spacing * (1.0 + kRelSlack))
        throw ValidationError("element side sqrt(A) must not exceed the spacing");
}

IrsGeometry IrsGeometry::from_ratios(std::int64_t m_y, std::int64_t m_z, double wavelength,
                                     double spacing_over_wavelength, double element_area_over_d2)
{
    const double d = spacing_over_wavelength * wavelength;
    return IrsGeometry(m_y, m_z, d, element_area_over_d2 * d * d, wavelength);
}

bool IrsGeometry::contains(std::int64_t i_y, std::int64_t i_z) const noexcept
{
    return i_y >= -half_y() && i_y <= half_y() && i_z >= -half_z() && i_z <= half_z();
}

IrsGeometry IrsGeometry::with_counts(std::int64_t m_y, std::int64_t m_z) const
{
    return IrsGeometry(m_y, m_z, spacing_, element_area_, wavelength_);
}

NodePosition::NodePosition(double range, double zenith, double azimuth)
    : range_(range), zenith_(zenith), azimuth_(azimuth)
{
    using std::numbers::pi;
    if (!finite_positive(range))
        throw ValidationError("range must be finite and positive");
    if (!std::isfinite(zenith) || zenith <= 0.0 || zenith >= pi)
        throw ValidationError("zenith angle must lie in (0, π)");
    if (!std::isfinite(azimuth) || azimuth <= -pi / 2 || azimuth >= pi / 2)
        throw ValidationError("azimuth angle must lie in (-π/2, π/2)");

    const double st = std::sin(zenith);
    dir_x_ = st * std::cos(azimuth);
    dir_y_ = st * std::sin(azimuth);
    dir_z_ = std::cos(zenith);
    if (!(dir_x_ > 0.0))
        throw ValidationError("node must lie strictly in front of the surface (Psi > 0)");
}

NodePosition NodePosition::mirrored() const
{
    return NodePosition(range_, std::numbers::pi - zenith_, -azimuth_);
}

NodePosition NodePosition::with_range(double range) const { return NodePosition(range, zenith_, azimuth_); }

Point3 spherical_to_cartesian(const NodePosition &node)
{
    return {node.range() * node.dir_x(), node.range() * node.dir_y(), node.range() * node.dir_z()};
}

Point3 element_position(const IrsGeometry &geom, std::int64_t i_y, std::int64_t i_z)
{
    require_index(geom, i_y, i_z);
    return {0.0, static_cast<double>(i_y) * geom.spacing(), static_cast<double>(i_z) * geom.spacing()};
}

double element_distance(const NodePosition &node, const IrsGeometry &geom, std::int64_t i_y, std::int64_t i_z)
{
    require_index(geom, i_y, i_z);
    const double bracket =
        distance_bracket(node, node.epsilon(geom), static_cast<double>(i_y), static_cast<double>(i_z));
    return node.range() * std::sqrt(bracket);
}

} // namespace xlirs
