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
 * Powell's derivative-free conjugate-direction minimizer.
 *
 * Each sweep runs one line minimization along every direction in the set,
 * then tries an extrapolated direction and, when Powell's test passes,
 * swaps it in for the direction of largest decrease. Line minimization is a
 * golden-ratio bracket followed by Brent's parabolic/golden-section search.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qmelt {

struct OptimizerSettings {
    /// Sweep stops when 2|df| <= relative_tolerance * (|f_old| + |f_new|) + 1e-12.
    double relative_tolerance{1e-6};
    /// Maximum number of sweeps.
    std::size_t max_iterations{1000};
    /// Fractional precision of each Brent line search.
    double line_search_tolerance{1e-6};
    /// Seed for parameter initialization (used by trainers, not by Powell).
    std::uint64_t seed{0};

    /// Throws InvalidArgument unless both tolerances are positive.
    void validate() const;

    friend bool operator==(const OptimizerSettings &, const OptimizerSettings &) = default;
};

using Objective = std::function<double(std::span<const double>)>;

struct PowellResult {
    std::vector<double> x;
    double value{0.0};
    std::size_t iterations{0};   ///< completed sweeps
    std::size_t evaluations{0};
    bool converged{false};
    /// Objective at x0 followed by the objective after every sweep.
    std::vector<double> trace;
};

/// Minimizes `f` from `x0`. Throws NumericalError if `f` returns a
/// non-finite value, with the evaluation count in the message.
PowellResult powell_minimize(const Objective &f, std::span<const double> x0,
                             const OptimizerSettings &settings);

struct LineMinimum {
    double step{0.0};
    double value{0.0};
};

/// One-dimensional minimization of g along [0, ...) starting from g(0) =
/// `g0`. The returned value never exceeds `g0`.
LineMinimum line_minimize(const std::function<double(double)> &g, double g0,
                          double tolerance);

} // namespace qmelt
