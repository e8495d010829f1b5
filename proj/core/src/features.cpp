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

#include "qmelt/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmelt/error.hpp"

namespace qmelt {

Features Scaler::transform(const Features &raw) const {
    Features out{};
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
        out[j] = ((raw[j] - mean[j]) / std[j]) / max_abs[j];
    }
    return out;
}

Features Scaler::inverse(const Features &scaled) const {
    Features out{};
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
        out[j] = scaled[j] * max_abs[j] * std[j] + mean[j];
    }
    return out;
}

Scaler fit_scaler(std::span<const Features> rows) {
    if (rows.size() < 2) {
        throw InvalidArgument("scaler needs at least two records");
    }
    const auto n = static_cast<double>(rows.size());
    Scaler scaler;
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
        double sum = 0.0;
        for (const Features &row : rows) {
            sum += row[j];
        }
        const double mean = sum / n;
        double ss = 0.0;
        for (const Features &row : rows) {
            ss += (row[j] - mean) * (row[j] - mean);
        }
        const double std = std::sqrt(ss / n);
        if (!(std > 1e-12 * std::max(1.0, std::abs(mean)))) {
            throw DegenerateFeature("feature '" + std::string(kFeatureNames[j]) +
                                    "' is constant on the fitting set");
        }
        double max_abs = 0.0;
        for (const Features &row : rows) {
            max_abs = std::max(max_abs, std::abs((row[j] - mean) / std));
        }
        scaler.mean[j] = mean;
        scaler.std[j] = std;
        scaler.max_abs[j] = max_abs;
    }
    return scaler;
}

Scaler fit_scaler(std::span<const FeatureRecord> records) {
    std::vector<Features> rows;
    rows.reserve(records.size());
    for (const FeatureRecord &r : records) {
        rows.push_back(r.features);
    }
    return fit_scaler(std::span<const Features>(rows));
}

double angle(AngleMap map, double x) {
    if (map == AngleMap::PiX) {
        return std::numbers::pi * x;
    }
    return std::atan(x) + 0.5 * std::numbers::pi;
}

std::vector<double> compile_angles(EncoderLayout layout, AngleMap map,
                                   const Features &scaled) {
    std::vector<double> angles;
    angles.reserve(qubit_count(layout));
    for (const double x : scaled) {
        switch (layout) {
        case EncoderLayout::FiveX:
            angles.push_back(angle(map, x));
            break;
        case EncoderLayout::TenXX:
            angles.push_back(angle(map, x));
            angles.push_back(angle(map, x));
            break;
        case EncoderLayout::TenXX2:
            angles.push_back(angle(map, x));
            angles.push_back(angle(map, x * x));
            break;
        }
    }
    return angles;
}

} // namespace qmelt
