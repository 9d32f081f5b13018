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

#ifndef XLIRS_VALIDATE_HPP
#define XLIRS_VALIDATE_HPP

#include <string>
#include <vector>

namespace xlirs::harness
{

struct CheckResult
{
    std::string tag;
    std::string name;
    bool passed = false;
    double measured = 0.0;  // worst deviation seen
    double threshold = 0.0; // pass limit for `measured`
    std::string detail;
};

struct ValidationOptions
{
    // Empty runs everything. Known tags: elliptic, quadrature, symmetry, dominance, bounds,
    // sum-integral, closed-forms, ula, upw, determinism.
    std::vector<std::string> tags;
    // Multiplies the default beta0^2 in the plane-wave agreement check.
    double beta0_scale = 1.0;
    int threads = 0;
};

std::vector<std::string> validation_tags();

// Cross-model identities and invariants. Failures are reported, not thrown.
std::vector<CheckResult> run_validation(const ValidationOptions &options = {});

std::string format_checks(const std::vector<CheckResult> &checks);

} // namespace xlirs::harness

#endif
