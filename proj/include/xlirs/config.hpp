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

#ifndef XLIRS_CONFIG_HPP
#define XLIRS_CONFIG_HPP

#include "xlirs/scenario.hpp"
#include "xlirs/snr_models.hpp"

#include <iosfwd>
#include <optional>
#include <string>

// Scenario files: flat `key = value` lines, `#` comments, optional [section] headers.
//
//   [geometry]                      keys: wavelength_m, spacing_over_wavelength,
//   wavelength_m = 0.125                  element_area_over_d2, my, mz
//   ...
//   [tx]  / [rx]                    keys: r_m, theta_rad, phi_rad (written tx.r_m etc.
//   r_m = 10                              outside a section)
//   theta_rad = pi/2
//   [power]                         key: pbar_db
//   [upw]                           optional: beta0_squared = <number> | far_field | free_space
//   [sweep]                         optional: var, grid, models (sweep.var etc. outside)
//
// Inside [tx], [rx], [upw] and [sweep] keys get the section name as prefix. Numbers may
// be written as multiples or fractions of pi (pi/3, -pi/5, 3*pi/4, 0.5*pi).

namespace xlirs::harness
{

struct ScenarioConfig
{
    // Checked construction; fails with the violated invariant.
    std::optional<Scenario> scenario;
    std::optional<UpwConfig> upw;
    std::string sweep_var;
    std::string sweep_grid;
    std::string models;
};

// Throws ParseError (syntax, unknown/duplicate/missing keys, bad numbers; with the
// line number and key) and ValidationError (invalid geometry or node).
ScenarioConfig parse_config(std::istream &in, const std::string &source = "<config>");
ScenarioConfig load_config(const std::string &path);

// "1.5", "pi/3", "-pi/5", "3*pi/4", "0.25*pi". Throws ParseError.
double parse_number(const std::string &text);

} // namespace xlirs::harness

#endif
