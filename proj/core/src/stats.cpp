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

#include "qmelt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qmelt/error.hpp"

namespace qmelt {

double mean(std::span<const double> values) {
    if (values.empty()) {
        throw InvalidArgument("mean of an empty range");
    }
    double total = 0.0;
    for (const double v : values) {
        total += v;
    }
    return total / static_cast<double>(values.size());
}

double population_std(std::span<const double> values) {
    const double m = mean(values);
    double ss = 0.0;
    for (const double v : values) {
        ss += (v - m) * (v - m);
    }
    return std::sqrt(ss / static_cast<double>(values.size()));
}

double rmse(std::span<const double> predicted, std::span<const double> actual) {
    if (predicted.size() != actual.size() || predicted.empty()) {
        throw InvalidArgument("rmse needs equal, non-empty ranges");
    }
    double ss = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const double r = predicted[i] - actual[i];
        ss += r * r;
    }
    return std::sqrt(ss / static_cast<double>(predicted.size()));
}

std::vector<double> average_ranks(std::span<const double> values, double tie_tolerance) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    auto tied = [&](double a, double b) {
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a - b) <= tie_tolerance * scale;
    };
    std::vector<double> ranks(n);
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && tied(values[order[end - 1]], values[order[end]])) {
            ++end;
        }
        const double rank = 0.5 * static_cast<double>(start + end - 1) + 1.0;
        for (std::size_t k = start; k < end; ++k) {
            ranks[order[k]] = rank;
        }
        start = end;
    }
    return ranks;
}

double spearman_correlation(std::span<const double> x, std::span<const double> y,
                            double tie_tolerance) {
    if (x.size() != y.size() || x.size() < 2) {
        throw InvalidArgument("spearman needs two equal ranges of length >= 2");
    }
    const auto rx = average_ranks(x, tie_tolerance);
    const auto ry = average_ranks(y, tie_tolerance);
    const double mx = mean(rx);
    const double my = mean(ry);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace qmelt
