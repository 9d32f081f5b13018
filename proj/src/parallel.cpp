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

#include "xlirs/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace xlirs
{

bool openmp_enabled() noexcept
{
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int worker_threads(int requested)
{
#ifdef _OPENMP
    if (requested > 0)
        return requested;
    int cap = 0;
    if (const char *env = std::getenv("XLIRS_THREADS"))
    {
        try
        {
            cap = std::stoi(env);
        }
        catch (...)
        {
            cap = 0;
        }
    }
    return cap > 0 ? cap : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

} // namespace xlirs
