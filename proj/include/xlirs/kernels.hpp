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

#ifndef XLIRS_KERNELS_HPP
#define XLIRS_KERNELS_HPP

#include "xlirs/scenario.hpp"

#include <cstdint>

// Element-grid sums behind the exact SNR. Both routines return the amplitude sum
// sum_{i_y, i_z} |h| |g|, so the SNR is (sum)^2 * Pbar.

namespace xlirs::kernels
{

// Flat row-major elements per compensated chunk. Fixed, so the reduction tree does not
// depend on the thread count.
inline constexpr std::int64_t kChunkSize = 8192;

// Serial reference: double loop over the grid, sqrt(a b) from the element gains,
// one compensated accumulator. Kept for tests and benchmarks.
double amplitude_sum_reference(const Scenario &scenario);

// Chunked kernel over the expanded weights (bracket_q bracket_p)^(-3/4). Each chunk is
// accumulated with compensation, chunks are merged pairwise. Bit-identical for any
// `threads` (0 = worker_threads()).
double amplitude_sum_chunked(const Scenario &scenario, int threads = 0);

} // namespace xlirs::kernels

#endif
