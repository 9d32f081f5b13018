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

#ifndef XLIRS_PRESETS_HPP
#define XLIRS_PRESETS_HPP

#include "xlirs/scenario.hpp"

#include <cstdint>

// Reference setups used by the validation suite, the acceptance tests and configs/.
// All share lambda = 0.125 m, d = lambda / 5 and A = (d / 2)^2 (occupation ratio 1/4).

namespace xlirs::presets
{

inline constexpr double kWavelength = 0.125;
inline constexpr double kSpacing = kWavelength / 5.0;
inline constexpr double kElementArea = (kSpacing / 2.0) * (kSpacing / 2.0);

IrsGeometry reference_geometry(std::int64_t m_y, std::int64_t m_z);

// Square surface of side ~L (odd-rounded), tx at 10 m and rx at 100 m on the boresight,
// Pbar = 90 dB.
Scenario boresight_square(double side);

// 5 m square surface, tx at (r_q, pi/3, pi/6), rx at (200 m, 3 pi/4, -pi/5), Pbar = 100 dB.
Scenario oblique_square(double tx_range);

// Line array (m_y = 1) of length ~L_z, tx at (10 m, pi/3, pi/6), rx at (r_p, 3 pi/4, -pi/5),
// Pbar = 120 dB.
Scenario line_array(double length_z, double rx_range = 100.0);

} // namespace xlirs::presets

#endif
