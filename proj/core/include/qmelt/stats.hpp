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
 * Small descriptive statistics used across the harness.
 */

#pragma once

#include <span>
#include <vector>

namespace qmelt {

double mean(std::span<const double> values);

/// Population standard deviation (divides by N).
double population_std(std::span<const double> values);

/// sqrt(mean((a - b)^2)). Throws InvalidArgument on size mismatch or empty input.
double rmse(std::span<const double> predicted, std::span<const double> actual);

/// Average ranks (1-based). Values within `tie_tolerance` (relative to the
/// larger magnitude, or absolute below 1) of their sorted neighbour share a rank.
std::vector<double> average_ranks(std::span<const double> values, double tie_tolerance = 0.0);

/// Spearman rank correlation with tie-averaged ranks. Returns NaN when
/// either ranking is constant.
double spearman_correlation(std::span<const double> x, std::span<const double> y,
                            double tie_tolerance = 0.0);

} // namespace qmelt
