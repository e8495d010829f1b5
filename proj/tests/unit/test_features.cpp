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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qmelt/error.hpp"
#include "qmelt/features.hpp"
#include "qmelt/state_vector.hpp"

namespace qmelt {
namespace {

std::vector<Features> sample_rows() {
    return {{-3.0, 1.0, 5.0, 0.5, 2.0},
            {-2.0, 4.0, 9.0, 0.6, 1.8},
            {-1.5, 0.0, 3.0, 0.9, 2.4},
            {-3.5, 6.0, 11.0, 0.4, 2.1}};
}

TEST(Scaler, StandardizedThenBoundedByOne) {
    const auto rows = sample_rows();
    const Scaler s = fit_scaler(std::span<const Features>(rows));
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
        double max_abs = 0.0;
        double sum = 0.0;
        for (const auto &r : rows) {
            const double x = s.transform(r)[j];
            max_abs = std::max(max_abs, std::abs(x));
            sum += x;
        }
        EXPECT_NEAR(max_abs, 1.0, 1e-14);
        EXPECT_NEAR(sum, 0.0, 1e-12);
    }
}

TEST(Scaler, UsesPopulationStandardDeviation) {
    const std::vector<Features> rows{{0, 0, 0, 0, 0}, {2, 2, 2, 2, 2}};
    const Scaler s = fit_scaler(std::span<const Features>(rows));
    EXPECT_DOUBLE_EQ(s.mean[0], 1.0);
    EXPECT_DOUBLE_EQ(s.std[0], 1.0);
    EXPECT_DOUBLE_EQ(s.max_abs[0], 1.0);
}

TEST(Scaler, InverseUndoesTransform) {
    const auto rows = sample_rows();
    const Scaler s = fit_scaler(std::span<const Features>(rows));
    for (const auto &r : rows) {
        const Features back = s.inverse(s.transform(r));
        for (std::size_t j = 0; j < kFeatureCount; ++j) {
            EXPECT_NEAR(back[j], r[j], 1e-12);
        }
    }
}

TEST(Scaler, ConstantFeatureIsDegenerate) {
    auto rows = sample_rows();
    for (auto &r : rows) {
        r[3] = 0.7;
    }
    try {
        (void)fit_scaler(std::span<const Features>(rows));
        FAIL() << "expected DegenerateFeature";
    } catch (const DegenerateFeature &e) {
        EXPECT_NE(std::string(e.what()).find("cati_anio_ratio"), std::string::npos);
    }
}

TEST(Scaler, NeedsTwoRows) {
    const std::vector<Features> one{{1, 2, 3, 4, 5}};
    EXPECT_THROW(fit_scaler(std::span<const Features>(one)), InvalidArgument);
}

TEST(AngleMap, PiXEncodesPlusAndMinusOneIdentically) {
    const auto plus = apply_gate(zero_state(1), Gate::ry(0, angle(AngleMap::PiX, 1.0)));
    const auto minus = apply_gate(zero_state(1), Gate::ry(0, angle(AngleMap::PiX, -1.0)));
    EXPECT_EQ(expectation_z(plus, 0), expectation_z(minus, 0));
}

TEST(AngleMap, ArctanShiftStaysInsideOpenInterval) {
    for (const double x : {-1e6, -1.0, 0.0, 1.0, 1e6}) {
        const double a = angle(AngleMap::ArctanShift, x);
        EXPECT_GT(a, 0.0);
        EXPECT_LT(a, std::numbers::pi);
    }
    EXPECT_DOUBLE_EQ(angle(AngleMap::ArctanShift, 0.0), std::numbers::pi / 2.0);
}

TEST(AngleMapProperty, ArctanShiftIsInjectiveOnExpectation) {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double x = u(gen);
        const double y = u(gen);
        if (x == y) {
            continue;
        }
        const double zx = std::cos(angle(AngleMap::ArctanShift, x));
        const double zy = std::cos(angle(AngleMap::ArctanShift, y));
        // cos(atan(x) + pi/2) = -x / sqrt(1 + x^2), strictly decreasing.
        EXPECT_NEAR(zx, -x / std::sqrt(1.0 + x * x), 1e-15);
        EXPECT_EQ(x < y, zx > zy);
    }
}

TEST(Target, ScaleIsDividedBy3500) {
    EXPECT_DOUBLE_EQ(scale_target(3500.0), 1.0);
    EXPECT_DOUBLE_EQ(unscale_target(scale_target(1234.5)), 1234.5);
}

} // namespace
} // namespace qmelt
