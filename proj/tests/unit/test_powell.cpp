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
#include <limits>

#include "qmelt/error.hpp"
#include "qmelt/powell.hpp"

namespace qmelt {
namespace {

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (const double v : x) {
        s += v * v;
    }
    return s;
}

double rosenbrock(std::span<const double> x) {
    const double a = 1.0 - x[0];
    const double b = x[1] - x[0] * x[0];
    return a * a + 100.0 * b * b;
}

TEST(Powell, SphereTenDimensions) {
    const std::vector<double> x0{1.0, -2.0, 0.5, 3.0, -1.5, 2.5, -0.7, 0.9, -3.1, 1.2};
    const PowellResult r = powell_minimize(sphere, x0, OptimizerSettings{});
    EXPECT_LT(r.value, 1e-8);
    EXPECT_TRUE(r.converged);
}

TEST(Powell, RosenbrockTwoDimensions) {
    const std::vector<double> x0{-1.2, 1.0};
    const PowellResult r = powell_minimize(rosenbrock, x0, OptimizerSettings{});
    EXPECT_LT(r.value, 1e-4);
    EXPECT_NEAR(r.x[0], 1.0, 1e-2);
    EXPECT_NEAR(r.x[1], 1.0, 2e-2);
}

TEST(Powell, TraceStartsAtInitialValueAndNeverIncreases) {
    const std::vector<double> x0{-1.2, 1.0};
    const PowellResult r = powell_minimize(rosenbrock, x0, OptimizerSettings{});
    ASSERT_GE(r.trace.size(), 2U);
    EXPECT_DOUBLE_EQ(r.trace.front(), rosenbrock(x0));
    EXPECT_DOUBLE_EQ(r.trace.back(), r.value);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
        EXPECT_LE(r.trace[i], r.trace[i - 1]);
    }
    EXPECT_EQ(r.trace.size(), r.iterations + 1);
}

TEST(Powell, RespectsIterationBudget) {
    OptimizerSettings s;
    s.max_iterations = 2;
    const std::vector<double> x0{-1.2, 1.0};
    const PowellResult r = powell_minimize(rosenbrock, x0, s);
    EXPECT_LE(r.iterations, 2U);
    EXPECT_FALSE(r.converged);
}

TEST(Powell, ZeroBudgetReturnsStartingPoint) {
    OptimizerSettings s;
    s.max_iterations = 0;
    const std::vector<double> x0{0.3, 0.4};
    const PowellResult r = powell_minimize(sphere, x0, s);
    EXPECT_EQ(r.x, x0);
    EXPECT_DOUBLE_EQ(r.value, 0.25);
}

TEST(Powell, NonFiniteObjectiveIsANumericalFailure) {
    const auto bad = [](std::span<const double> x) {
        return x[0] > 0.5 ? std::numeric_limits<double>::quiet_NaN() : (x[0] - 2.0) * (x[0] - 2.0);
    };
    const std::vector<double> x0{0.0};
    EXPECT_THROW(powell_minimize(bad, x0, OptimizerSettings{}), NumericalError);
}

TEST(Powell, InvalidSettings) {
    OptimizerSettings s;
    s.relative_tolerance = 0.0;
    const std::vector<double> x0{1.0};
    EXPECT_THROW(powell_minimize(sphere, x0, s), InvalidArgument);
}

TEST(LineMinimize, FindsParabolaVertex) {
    const auto g = [](double t) { return (t - 1.7) * (t - 1.7) + 0.5; };
    const LineMinimum m = line_minimize(g, g(0.0), 1e-8);
    EXPECT_NEAR(m.step, 1.7, 1e-6);
    EXPECT_NEAR(m.value, 0.5, 1e-12);
}

TEST(LineMinimize, NeverReturnsWorseThanStart) {
    const auto g = [](double t) { return std::abs(t) + 1.0; };
    const LineMinimum m = line_minimize(g, g(0.0), 1e-8);
    EXPECT_LE(m.value, 1.0);
}

TEST(LineMinimize, SearchesNegativeDirection) {
    const auto g = [](double t) { return (t + 3.0) * (t + 3.0); };
    const LineMinimum m = line_minimize(g, g(0.0), 1e-8);
    EXPECT_NEAR(m.step, -3.0, 1e-6);
}

} // namespace
} // namespace qmelt
