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

#include "xlirs/summation.hpp"

namespace xlirs
{

CompensatedSum pairwise_merge(std::span<const CompensatedSum> parts) noexcept
{
    if (parts.empty())
        return {};
    if (parts.size() == 1)
        return parts.front();
    const auto half = parts.size() / 2;
    return merge(pairwise_merge(parts.first(half)), pairwise_merge(parts.subspan(half)));
}

} // namespace xlirs
