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

#include "qmelt/expressibility.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qmelt/error.hpp"
#include "qmelt/parallel.hpp"
#include "qmelt/rng.hpp"
#include "qmelt/state_vector.hpp"

namespace qmelt {

namespace {

constexpr double kSampleRounding = 1e-9;

std::vector<double> draw_parameters(Rng &rng, std::size_t count) {
    std::vector<double> params(count);
    for (double &p : params) {
        p = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    return params;
}

StateVector prepare(const Circuit &ansatz, std::span<const double> params) {
    StateVector state = StateVector::zero(ansatz.n_qubits());
    state.run(ansatz, params);
    return state;
}

} // namespace

std::vector<double> sample_pair_fidelities(const Circuit &ansatz, std::size_t n_pairs,
                                           std::uint64_t seed) {
    if (n_pairs == 0) {
        throw InvalidArgument("need at least one fidelity pair");
    }
    const std::size_t p = ansatz.parameter_count();
    Rng rng(seed);
    std::vector<std::vector<double>> draws(2 * n_pairs);
    for (auto &d : draws) {
        d = draw_parameters(rng, p);
    }
    std::vector<double> fidelities(n_pairs);
    parallel_for(n_pairs, [&](std::size_t i) {
        const StateVector a = prepare(ansatz, draws[2 * i]);
        const StateVector b = prepare(ansatz, draws[2 * i + 1]);
        fidelities[i] = fidelity(a, b);
    });
    return fidelities;
}

std::vector<double> sample_pair_fidelities(const AnsatzSpec &ansatz, std::size_t n_pairs,
                                           std::uint64_t seed) {
    return sample_pair_fidelities(build_ansatz(ansatz), n_pairs, seed);
}

std::vector<double> haar_bin_probabilities(std::size_t n_qubits, std::size_t n_bins) {
    if (n_bins < 2) {
        throw InvalidArgument("need at least two bins");
    }
    if (n_qubits < 1 || n_qubits > 62) {
        throw InvalidArgument("n_qubits out of range");
    }
    const double exponent = std::ldexp(1.0, static_cast<int>(n_qubits)) - 1.0;
    auto survival = [&](double f) { return std::pow(1.0 - f, exponent); };
    std::vector<double> mass(n_bins);
    const auto bins = static_cast<double>(n_bins);
    for (std::size_t i = 0; i < n_bins; ++i) {
        const double lo = static_cast<double>(i) / bins;
        const double hi = static_cast<double>(i + 1) / bins;
        mass[i] = survival(lo) - survival(hi);
    }
    return mass;
}

double kl_divergence(std::span<const double> samples, std::size_t n_qubits,
                     std::size_t n_bins) {
    if (samples.size() < 100) {
        throw InvalidArgument("KL divergence needs at least 100 samples, got " +
                              std::to_string(samples.size()));
    }
    const auto haar = haar_bin_probabilities(n_qubits, n_bins);
    std::vector<std::size_t> counts(n_bins, 0);
    for (const double f : samples) {
        if (!(f >= -kSampleRounding && f <= 1.0 + kSampleRounding)) {
            throw InvalidArgument("fidelity sample " + std::to_string(f) +
                                  " outside [0, 1]");
        }
        const double clamped = std::clamp(f, 0.0, 1.0);
        const auto bin = std::min(
            n_bins - 1, static_cast<std::size_t>(clamped * static_cast<double>(n_bins)));
        ++counts[bin];
    }
    const auto total = static_cast<double>(samples.size());
    double kl = 0.0;
    for (std::size_t i = 0; i < n_bins; ++i) {
        if (counts[i] == 0) {
            continue;
        }
        const double p = static_cast<double>(counts[i]) / total;
        kl += p * std::log(p / haar[i]);
    }
    return std::max(kl, 0.0);
}

double mean_entanglement_entropy(const Circuit &ansatz, std::size_t n_samples,
                                 std::uint64_t seed) {
    if (ansatz.n_qubits() < 2) {
        throw InvalidArgument("entanglement entropy needs width >= 2");
    }
    if (n_samples == 0) {
        throw InvalidArgument("need at least one entropy sample");
    }
    Rng rng(seed);
    std::vector<std::vector<double>> draws(n_samples);
    for (auto &d : draws) {
        d = draw_parameters(rng, ansatz.parameter_count());
    }
    std::vector<double> per_sample(n_samples);
    parallel_for(n_samples, [&](std::size_t i) {
        per_sample[i] = mean_qubit_entropy(prepare(ansatz, draws[i]));
    });
    double total = 0.0;
    for (const double e : per_sample) {
        total += e;
    }
    return total / static_cast<double>(n_samples);
}

double mean_entanglement_entropy(const AnsatzSpec &ansatz, std::size_t n_samples,
                                 std::uint64_t seed) {
    return mean_entanglement_entropy(build_ansatz(ansatz), n_samples, seed);
}

ExpressibilityReport evaluate_expressibility(const AnsatzSpec &ansatz,
                                             const ExpressibilitySettings &settings) {
    const Circuit circuit = build_ansatz(ansatz);
    ExpressibilityReport report;
    report.ansatz = ansatz;
    report.n_samples = settings.n_pairs;
    report.n_bins = settings.n_bins;
    report.entropy_samples = settings.entropy_samples;
    report.seed = settings.seed;
    const auto fidelities = sample_pair_fidelities(circuit, settings.n_pairs, settings.seed);
    report.kl_divergence = kl_divergence(fidelities, ansatz.width, settings.n_bins);
    report.mean_entanglement_entropy = mean_entanglement_entropy(
        circuit, settings.entropy_samples, derive_seed(settings.seed, "entropy"));
    return report;
}

} // namespace qmelt
