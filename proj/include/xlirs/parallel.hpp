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

#ifndef XLIRS_PARALLEL_HPP
#define XLIRS_PARALLEL_HPP

namespace xlirs
{

// Worker count for parallel kernels. `requested` > 0 wins; otherwise XLIRS_THREADS caps
// the pool (unset or 0 means the OpenMP default). Always >= 1; 1 without OpenMP.
int worker_threads(int requested = 0);

bool openmp_enabled() noexcept;

} // namespace xlirs

#endif
