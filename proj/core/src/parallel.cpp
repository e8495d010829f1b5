// Copyright 2026 The qmelt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmelt/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qmelt {

std::size_t worker_count() {
    if (const char *env = std::getenv("QMELT_THREADS")) {
        try {
            const auto n = std::stoul(env);
            return n == 0 ? 1 : n;
        } catch (const std::exception &) {
            return 1;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace qmelt
