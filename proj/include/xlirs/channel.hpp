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

#ifndef XLIRS_CHANNEL_HPP
#define XLIRS_CHANNEL_HPP

#include "xlirs/scenario.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace xlirs
{

// Largest grid for which channel_vector() materializes the full vector.
inline constexpr std::int64_t kMaxExplicitElements = 1'000'000;

// Channel power gain between a node and element (i_y, i_z): free-space loss times the
// projected aperture A Psi, i.e. A Psi / (4 pi r^2 bracket^(3/2)). Serves both hops.
double element_gain(const NodePosition &node, const IrsGeometry &geom, std::int64_t i_y, std::int64_t i_z);

// Per-element channel sqrt(gain) * exp(-j 2 pi r_elem / lambda), row-major with i_z outer
// and i_y inner. Throws ValidationError above kMaxExplicitElements.
std::vector<std::complex<double>> channel_vector(const NodePosition &node, const IrsGeometry &geom);

// Reflection phases on the element grid, stored reduced to [0, 2 pi), same layout as
// channel_vector().
class PhaseProfile
{
public:
    PhaseProfile(std::int64_t m_y, std::int64_t m_z, std::vector<double> phases);

    std::int64_t m_y() const noexcept { return m_y_; }
    std::int64_t m_z() const noexcept { return m_z_; }
    const std::vector<double> &values() const noexcept { return phases_; }
    double at(std::int64_t i_y, std::int64_t i_z) const;

private:
    std::int64_t m_y_;
    std::int64_t m_z_;
    std::vector<double> phases_;
};

// 2 pi (r_q,elem + r_p,elem) / lambda, reduced modulo 2 pi. Co-phases every reflected path.
PhaseProfile optimal_phases(const Scenario &scenario);

// |sum g e^{j theta} h|^2 Pbar. Throws ValidationError on a dimension mismatch.
SnrEstimate snr_with_phases(const Scenario &scenario, const PhaseProfile &phases);

// (sum |h| |g|)^2 Pbar via the chunked compensated kernel. `threads` = 0 uses worker_threads().
SnrEstimate snr_exact_sum(const Scenario &scenario, int threads = 0);

} // namespace xlirs

#endif
