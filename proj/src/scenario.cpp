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

#include "xlirs/scenario.hpp"
#include "xlirs/errors.hpp"

#include <cmath>
#include <utility>

namespace xlirs
{

Scenario::Scenario(IrsGeometry geom, NodePosition tx, NodePosition rx, double transmit_snr)
    : geom_(std::move(geom)), tx_(tx), rx_(rx), pbar_(transmit_snr)
{
    if (!std::isfinite(transmit_snr) || transmit_snr <= 0.0)
        throw ValidationError("transmit SNR must be finite and positive");
}

std::string_view to_string(ModelTag tag) noexcept
{
    switch (tag)
    {
    case ModelTag::ExactSum: return "exact-sum";
    case ModelTag::IntegralUpa: return "integral-upa";
    case ModelTag::BoundLower: return "bound-lower";
    case ModelTag::BoundUpper: return "bound-upper";
    case ModelTag::BoresightClosed: return "boresight-closed";
    case ModelTag::AsymptoticUpa: return "asymptotic-upa";
    case ModelTag::UlaIntegral: return "ula-integral";
    case ModelTag::UlaClosed: return "ula-closed";
    case ModelTag::UlaAsymptotic: return "ula-asymptotic";
    case ModelTag::Upw: return "upw";
    }
    return "unknown";
}

double to_db(double linear) { return 10.0 * std::log10(linear); }
double from_db(double db) { return std::pow(10.0, db / 10.0); }

double SnrEstimate::db() const { return to_db(value); }

} // namespace xlirs
