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

#include "xlirs/presets.hpp"
#include "xlirs/harness.hpp"

#include <numbers>

namespace xlirs::presets
{

using std::numbers::pi;

IrsGeometry reference_geometry(std::int64_t m_y, std::int64_t m_z)
{
    return IrsGeometry(m_y, m_z, kSpacing, kElementArea, kWavelength);
}

Scenario boresight_square(double side)
{
    const auto m = harness::nearest_odd_count(side, kSpacing);
    return Scenario(reference_geometry(m, m), NodePosition(10.0, pi / 2, 0.0), NodePosition(100.0, pi / 2, 0.0),
                    from_db(90.0));
}

Scenario oblique_square(double tx_range)
{
    const auto m = harness::nearest_odd_count(5.0, kSpacing);
    return Scenario(reference_geometry(m, m), NodePosition(tx_range, pi / 3, pi / 6),
                    NodePosition(200.0, 3 * pi / 4, -pi / 5), from_db(100.0));
}

Scenario line_array(double length_z, double rx_range)
{
    const auto m = harness::nearest_odd_count(length_z, kSpacing);
    return Scenario(reference_geometry(1, m), NodePosition(10.0, pi / 3, pi / 6),
                    NodePosition(rx_range, 3 * pi / 4, -pi / 5), from_db(120.0));
}

} // namespace xlirs::presets
