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

/**
 * @file
 * Portable seeded random streams.
 *
 * The standard distributions are implementation-defined, so results would
 * differ across standard libraries. Everything here is derived directly from
 * the bits of std::mt19937_64, which is fully specified.
 */

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qmelt {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_{seed} {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n);

    /// Standard normal via Box-Muller (one value per call, no caching).
    double normal();

    std::uint64_t next() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

/// Stable 64-bit FNV-1a hash of a byte string.
std::uint64_t fnv1a(std::string_view text);

/// Child seed that depends only on (base, key); used to make sweeps
/// independent of cell execution order.
std::uint64_t derive_seed(std::uint64_t base, std::string_view key);

} // namespace qmelt
