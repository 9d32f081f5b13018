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

#ifndef XLIRS_SUMMATION_HPP
#define XLIRS_SUMMATION_HPP

#include <cmath>
#include <complex>
#include <span>

namespace xlirs
{

// Neumaier compensated accumulator.
struct CompensatedSum
{
    double sum = 0.0;
    double compensation = 0.0;

    void add(double v) noexcept
    {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            compensation += (sum - t) + v;
        else
            compensation += (v - t) + sum;
        sum = t;
    }

    double value() const noexcept { return sum + compensation; }

    // Exact two-sum of the leading parts, compensations added.
    friend CompensatedSum merge(const CompensatedSum &a, const CompensatedSum &b) noexcept
    {
        const double s = a.sum + b.sum;
        const double bb = s - a.sum;
        const double err = (a.sum - (s - bb)) + (b.sum - bb);
        return {s, a.compensation + b.compensation + err};
    }
};

// Pairwise tree reduction in index order. The tree depends only on parts.size().
CompensatedSum pairwise_merge(std::span<const CompensatedSum> parts) noexcept;

struct CompensatedComplexSum
{
    CompensatedSum re;
    CompensatedSum im;

    void add(std::complex<double> v) noexcept
    {
        re.add(v.real());
        im.add(v.imag());
    }
    std::complex<double> value() const noexcept { return {re.value(), im.value()}; }
};

} // namespace xlirs

#endif
