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

#include <benchmark/benchmark.h>

#include <span>
#include <vector>

#include "qmelt/circuit_model.hpp"
#include "qmelt/dataset.hpp"
#include "qmelt/expressibility.hpp"
#include "qmelt/qnn.hpp"
#include "qmelt/rng.hpp"
#include "qmelt/state_vector.hpp"

namespace {

using namespace qmelt;

std::vector<double> random_angles(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out(n);
    for (double &a : out) {
        a = rng.uniform(-3.0, 3.0);
    }
    return out;
}

// One Ry layer followed by a linear CX chain, repeated on a fresh register.
void BM_GateLayer(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto angles = random_angles(n, 1);
    for (auto _ : state) {
        StateVector s = zero_state(n);
        for (std::size_t q = 0; q < n; ++q) {
            s.apply(Gate::ry(q, angles[q]));
        }
        for (std::size_t q = 0; q + 1 < n; ++q) {
            s.apply(Gate::cx(q, q + 1));
        }
        benchmark::DoNotOptimize(s.norm_squared());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n - 1));
}
BENCHMARK(BM_GateLayer)->Arg(5)->Arg(10)->Arg(14);

// Mean squared error over 70 synthetic records for a width/depth pair.
void BM_RegressionCost(benchmark::State &state) {
    const auto depth = static_cast<std::size_t>(state.range(0));
    const bool wide = state.range(1) != 0;
    const Dataset data = generate_synthetic_dataset(70, 100.0, 3);
    QnnModel model =
        make_model(EncoderSpec{wide ? EncoderLayout::TenXX2 : EncoderLayout::FiveX,
                               AngleMap::ArctanShift},
                   AnsatzSpec{wide ? 10u : 5u, depth, EntanglerKind::Linear, EntanglingGate::CX});
    model.scaler = fit_scaler(data.records);
    const ExpectationRegression cost = make_cost(model, data.records);
    const auto params = random_angles(cost.parameter_count(), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cost(params));
    }
}
BENCHMARK(BM_RegressionCost)
    ->Args({1, 0})
    ->Args({7, 0})
    ->Args({1, 1})
    ->Args({2, 1})
    ->Unit(benchmark::kMicrosecond);

void BM_PairFidelities(benchmark::State &state) {
    const AnsatzSpec spec{5, static_cast<std::size_t>(state.range(0)), EntanglerKind::Circular,
                          EntanglingGate::CX};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_pair_fidelities(spec, 500, 7));
    }
    state.SetItemsProcessed(state.iterations() * 500);
}
BENCHMARK(BM_PairFidelities)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
