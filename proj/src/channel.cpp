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
#include "xlirs/summation.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace xlirs
{

namespace
{
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 2 pi * frac(x), in [0, 2 pi). Reducing in wavelengths before scaling keeps the phase
// exact for whole-wavelength distances.
double turns_to_phase(double turns)
{
    double frac = turns - std::floor(turns);
    if (frac >= 1.0)
        frac = 0.0;
    return kTwoPi * frac;
}
} // namespace

double element_gain(const NodePosition &node, const IrsGeometry &geom, std::int64_t i_y, std::int64_t i_z)
{
    require_index(geom, i_y, i_z);
    const double bracket =
        distance_bracket(node, node.epsilon(geom), static_cast<double>(i_y), static_cast<double>(i_z));
    const double r = node.range();
    return geom.element_area() * node.dir_x() / (4.0 * std::numbers::pi * r * r * bracket * std::sqrt(bracket));
}

std::vector<std::complex<double>> channel_vector(const NodePosition &node, const IrsGeometry &geom)
{
    if (geom.element_count() > kMaxExplicitElements)
        throw ValidationError("explicit channel vectors are limited to " + std::to_string(kMaxExplicitElements) +
                              " elements");
    std::vector<std::complex<double>> h;
    h.reserve(static_cast<std::size_t>(geom.element_count()));
    for (std::int64_t i_z = -geom.half_z(); i_z <= geom.half_z(); ++i_z)
        for (std::int64_t i_y = -geom.half_y(); i_y <= geom.half_y(); ++i_y)
        {
            const double amplitude = std::sqrt(element_gain(node, geom, i_y, i_z));
            const double phase = -turns_to_phase(element_distance(node, geom, i_y, i_z) / geom.wavelength());
            h.push_back(std::polar(amplitude, phase));
        }
    return h;
}

PhaseProfile::PhaseProfile(std::int64_t m_y, std::int64_t m_z, std::vector<double> phases)
    : m_y_(m_y), m_z_(m_z), phases_(std::move(phases))
{
    if (m_y < 1 || m_z < 1 || static_cast<std::int64_t>(phases_.size()) != m_y * m_z)
        throw ValidationError("phase profile size does not match a " + std::to_string(m_y) + "x" +
                              std::to_string(m_z) + " grid");
    for (auto &v : phases_)
    {
        if (!std::isfinite(v))
            throw ValidationError("phase values must be finite");
        v = turns_to_phase(v / kTwoPi);
    }
}

double PhaseProfile::at(std::int64_t i_y, std::int64_t i_z) const
{
    const std::int64_t hy = (m_y_ - 1) / 2, hz = (m_z_ - 1) / 2;
    if (i_y < -hy || i_y > hy || i_z < -hz || i_z > hz)
        throw ValidationError("phase index out of range");
    return phases_[static_cast<std::size_t>((i_z + hz) * m_y_ + (i_y + hy))];
}

PhaseProfile optimal_phases(const Scenario &scenario)
{
    const auto &geom = scenario.geometry();
    std::vector<double> phases;
    phases.reserve(static_cast<std::size_t>(geom.element_count()));
    for (std::int64_t i_z = -geom.half_z(); i_z <= geom.half_z(); ++i_z)
        for (std::int64_t i_y = -geom.half_y(); i_y <= geom.half_y(); ++i_y)
        {
            const double rq = element_distance(scenario.tx(), geom, i_y, i_z);
            const double rp = element_distance(scenario.rx(), geom, i_y, i_z);
            // Sum of the per-hop reduced phases, so each hop's rounding cancels in the composite.
            phases.push_back(turns_to_phase(rq / geom.wavelength()) + turns_to_phase(rp / geom.wavelength()));
        }
    return PhaseProfile(geom.m_y(), geom.m_z(), std::move(phases));
}

SnrEstimate snr_with_phases(const Scenario &scenario, const PhaseProfile &phases)
{
    const auto &geom = scenario.geometry();
    if (phases.m_y() != geom.m_y() || phases.m_z() != geom.m_z())
        throw ValidationError("phase profile is " + std::to_string(phases.m_y()) + "x" +
                              std::to_string(phases.m_z()) + " but the surface is " + std::to_string(geom.m_y()) +
                              "x" + std::to_string(geom.m_z()));
    const auto h = channel_vector(scenario.tx(), geom);
    const auto g = channel_vector(scenario.rx(), geom);
    CompensatedComplexSum acc;
    for (std::size_t k = 0; k < h.size(); ++k)
        acc.add(g[k] * std::polar(1.0, phases.values()[k]) * h[k]);
    return {std::norm(acc.value()) * scenario.transmit_snr(), ModelTag::ExactSum, {}};
}

SnrEstimate snr_exact_sum(const Scenario &scenario, int threads)
{
    const double amplitude = kernels::amplitude_sum_chunked(scenario, threads);
    return {amplitude * amplitude * scenario.transmit_snr(), ModelTag::ExactSum, {}};
}

} // namespace xlirs
