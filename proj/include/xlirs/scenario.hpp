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

#ifndef XLIRS_SCENARIO_HPP
#define XLIRS_SCENARIO_HPP

#include "xlirs/geometry.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace xlirs
{

// Surface, transmitter (q), receiver (p) and transmit SNR Pbar = P / sigma^2 (linear).
class Scenario
{
public:
    Scenario(IrsGeometry geom, NodePosition tx, NodePosition rx, double transmit_snr);

    const IrsGeometry &geometry() const noexcept { return geom_; }
    const NodePosition &tx() const noexcept { return tx_; }
    const NodePosition &rx() const noexcept { return rx_; }
    double transmit_snr() const noexcept { return pbar_; }

    // Closer and farther node. Ties resolve to (tx, rx).
    const NodePosition &near_node() const noexcept { return rx_.range() < tx_.range() ? rx_ : tx_; }
    const NodePosition &far_node() const noexcept { return rx_.range() < tx_.range() ? tx_ : rx_; }

    // min(r_q, r_p) / max(r_q, r_p), in (0, 1].
    double distance_ratio() const noexcept { return near_node().range() / far_node().range(); }

    Scenario swapped() const { return Scenario(geom_, rx_, tx_, pbar_); }
    Scenario with_geometry(const IrsGeometry &geom) const { return Scenario(geom, tx_, rx_, pbar_); }
    Scenario with_tx(const NodePosition &tx) const { return Scenario(geom_, tx, rx_, pbar_); }
    Scenario with_rx(const NodePosition &rx) const { return Scenario(geom_, tx_, rx, pbar_); }
    Scenario with_transmit_snr(double pbar) const { return Scenario(geom_, tx_, rx_, pbar); }

private:
    IrsGeometry geom_;
    NodePosition tx_;
    NodePosition rx_;
    double pbar_;
};

enum class ModelTag
{
    ExactSum,
    IntegralUpa,
    BoundLower,
    BoundUpper,
    BoresightClosed,
    AsymptoticUpa,
    UlaIntegral,
    UlaClosed,
    UlaAsymptotic,
    Upw
};

std::string_view to_string(ModelTag tag) noexcept;

// Linear SNR plus the model that produced it and any applicability warnings.
struct SnrEstimate
{
    double value = 0.0;
    ModelTag model = ModelTag::ExactSum;
    std::vector<std::string> diagnostics;

    double db() const;
};

double to_db(double linear);
double from_db(double db);

} // namespace xlirs

#endif
