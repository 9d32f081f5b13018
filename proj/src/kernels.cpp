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

#include "xlirs/kernels.hpp"
#include "xlirs/channel.hpp"
#include "xlirs/parallel.hpp"
#include "xlirs/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace xlirs::kernels
{

double amplitude_sum_reference(const Scenario &scenario)
{
    const auto &geom = scenario.geometry();
    CompensatedSum acc;
    for (std::int64_t i_z = -geom.half_z(); i_z <= geom.half_z(); ++i_z)
        for (std::int64_t i_y = -geom.half_y(); i_y <= geom.half_y(); ++i_y)
        {
            const double a = element_gain(scenario.tx(), geom, i_y, i_z);
            const double b = element_gain(scenario.rx(), geom, i_y, i_z);
            acc.add(std::sqrt(a * b));
        }
    return acc.value();
}

namespace
{

// Per-node bracket 1 - 2 eps (i_y Phi + i_z Omega) + (i_y^2 + i_z^2) eps^2, split into a
// row part (fixed i_z) and a column part.
struct BracketTerms
{
    double eps;
    double dir_y;
    double dir_z;

    double row(double i_z) const noexcept { return 1.0 - 2.0 * eps * i_z * dir_z + i_z * i_z * eps * eps; }
    double col(double i_y) const noexcept { return -2.0 * eps * i_y * dir_y + i_y * i_y * eps * eps; }
};

CompensatedSum chunk_sum(const BracketTerms &q, const BracketTerms &p, std::int64_t m_y, std::int64_t half_y,
                         std::int64_t half_z, std::int64_t begin, std::int64_t end)
{
    std::int64_t row = begin / m_y;
    std::int64_t col = begin % m_y;
    double i_z = static_cast<double>(row - half_z);
    double row_q = q.row(i_z);
    double row_p = p.row(i_z);

    CompensatedSum acc;
    for (std::int64_t k = begin; k < end; ++k)
    {
        const double i_y = static_cast<double>(col - half_y);
        const double bq = row_q + q.col(i_y);
        const double bp = row_p + p.col(i_y);
        const double s = std::sqrt(bq * bp);
        acc.add(1.0 / (s * std::sqrt(s)));
        if (++col == m_y)
        {
            col = 0;
            i_z += 1.0;
            row_q = q.row(i_z);
            row_p = p.row(i_z);
        }
    }
    return acc;
}

} // namespace

double amplitude_sum_chunked(const Scenario &scenario, int threads)
{
    const auto &geom = scenario.geometry();
    const auto &tx = scenario.tx();
    const auto &rx = scenario.rx();
    const BracketTerms q{tx.epsilon(geom), tx.dir_y(), tx.dir_z()};
    const BracketTerms p{rx.epsilon(geom), rx.dir_y(), rx.dir_z()};

    const std::int64_t total = geom.element_count();
    const std::int64_t chunks = (total + kChunkSize - 1) / kChunkSize;
    std::vector<CompensatedSum> partial(static_cast<std::size_t>(chunks));

    const int workers = worker_threads(threads);
    const std::int64_t m_y = geom.m_y(), half_y = geom.half_y(), half_z = geom.half_z();

#pragma omp parallel for schedule(static) num_threads(workers) if (workers > 1 && chunks > 1)
    for (std::int64_t c = 0; c < chunks; ++c)
    {
        const std::int64_t begin = c * kChunkSize;
        const std::int64_t end = std::min(total, begin + kChunkSize);
        partial[static_cast<std::size_t>(c)] = chunk_sum(q, p, m_y, half_y, half_z, begin, end);
    }

    const double weights = pairwise_merge(partial).value();

    // sqrt(a b) = A sqrt(Psi_q Psi_p) / (4 pi r_q r_p) * (bracket_q bracket_p)^(-3/4)
    const double scale = geom.element_area() * std::sqrt(tx.dir_x() * rx.dir_x()) /
                         (4.0 * std::numbers::pi * tx.range() * rx.range());
    return scale * weights;
}

} // namespace xlirs::kernels
