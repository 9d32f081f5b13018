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

#ifndef XLIRS_GEOMETRY_HPP
#define XLIRS_GEOMETRY_HPP

#include <cstdint>

// Coordinate conventions
// - The surface lies in the y-z plane, centered at the origin, with its normal along +x.
// - Element (i_y, i_z) sits at (0, i_y d, i_z d) with |i_y| <= (m_y-1)/2 and |i_z| <= (m_z-1)/2.
// - A node at range r, zenith theta and azimuth phi is at r * (Psi, Phi, Omega) with
//   Psi = sin(theta) cos(phi), Phi = sin(theta) sin(phi), Omega = cos(theta).
// - Angles are radians, lengths are meters.

namespace xlirs
{

struct Point3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double norm(const Point3 &p);
Point3 operator-(const Point3 &a, const Point3 &b);

// Uniform planar array of m_y x m_z elements. Both counts must be odd.
class IrsGeometry
{
public:
    // Throws ValidationError unless m_y, m_z are odd and >= 1 and sqrt(A) <= d <= wavelength/2.
    IrsGeometry(std::int64_t m_y, std::int64_t m_z, double spacing, double element_area, double wavelength);

    // Geometry from the ratios used in config files: d = spacing_over_wavelength * lambda,
    // A = element_area_over_d2 * d^2.
    static IrsGeometry from_ratios(std::int64_t m_y, std::int64_t m_z, double wavelength,
                                   double spacing_over_wavelength, double element_area_over_d2);

    std::int64_t m_y() const noexcept { return m_y_; }
    std::int64_t m_z() const noexcept { return m_z_; }
    std::int64_t half_y() const noexcept { return (m_y_ - 1) / 2; }
    std::int64_t half_z() const noexcept { return (m_z_ - 1) / 2; }
    std::int64_t element_count() const noexcept { return m_y_ * m_z_; }

    double spacing() const noexcept { return spacing_; }
    double element_area() const noexcept { return element_area_; }
    double wavelength() const noexcept { return wavelength_; }

    double length_y() const noexcept { return static_cast<double>(m_y_) * spacing_; }
    double length_z() const noexcept { return static_cast<double>(m_z_) * spacing_; }
    double occupation_ratio() const noexcept { return element_area_ / (spacing_ * spacing_); }

    bool contains(std::int64_t i_y, std::int64_t i_z) const noexcept;

    // Same element parameters, different counts.
    IrsGeometry with_counts(std::int64_t m_y, std::int64_t m_z) const;

private:
    std::int64_t m_y_;
    std::int64_t m_z_;
    double spacing_;
    double element_area_;
    double wavelength_;
};

// Transmitter or receiver location in spherical form, strictly in front of the surface.
class NodePosition
{
public:
    // Throws ValidationError for r <= 0, theta outside (0, pi) or phi outside (-pi/2, pi/2).
    NodePosition(double range, double zenith, double azimuth);

    double range() const noexcept { return range_; }
    double zenith() const noexcept { return zenith_; }
    double azimuth() const noexcept { return azimuth_; }

    // Direction cosines (Psi, Phi, Omega).
    double dir_x() const noexcept { return dir_x_; }
    double dir_y() const noexcept { return dir_y_; }
    double dir_z() const noexcept { return dir_z_; }

    double epsilon(const IrsGeometry &geom) const noexcept { return geom.spacing() / range_; }

    // The node mirrored through the x axis: (Phi, Omega) -> (-Phi, -Omega), same range and Psi.
    NodePosition mirrored() const;
    NodePosition with_range(double range) const;

private:
    double range_;
    double zenith_;
    double azimuth_;
    double dir_x_;
    double dir_y_;
    double dir_z_;
};

Point3 spherical_to_cartesian(const NodePosition &node);

// Throws ValidationError when the index is outside the grid.
void require_index(const IrsGeometry &geom, std::int64_t i_y, std::int64_t i_z);

Point3 element_position(const IrsGeometry &geom, std::int64_t i_y, std::int64_t i_z);

// Normalized squared element distance (r_elem / r)^2
//   = 1 - 2 i_y eps Phi - 2 i_z eps Omega + (i_y^2 + i_z^2) eps^2,
// always >= Psi^2 > 0. No index check.
inline double distance_bracket(const NodePosition &node, double eps, double i_y, double i_z) noexcept
{
    return 1.0 - 2.0 * eps * (i_y * node.dir_y() + i_z * node.dir_z()) + (i_y * i_y + i_z * i_z) * eps * eps;
}

double element_distance(const NodePosition &node, const IrsGeometry &geom, std::int64_t i_y, std::int64_t i_z);

} // namespace xlirs

#endif
