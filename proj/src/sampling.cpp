// Copyright 2026 The sfwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sfw/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "sfw/errors.hpp"
#include "sfw/kernels.hpp"
#include "sfw/seed.hpp"

namespace sfw {

namespace {

struct SettingStats {
    double mean = 0.0;
    double variance_of_mean = 0.0;
};

std::vector<std::int64_t> sample_histogram(std::span<const double> cumulative,
                                           std::int64_t shots, std::uint64_t seed) {
    const std::size_t outcomes = cumulative.size();
    const double total = cumulative.back();
    const std::int64_t blocks = (shots + kShotBlock - 1) / kShotBlock;
    std::vector<std::int64_t> histogram(outcomes, 0);
#pragma omp parallel
    {
        std::vector<std::int64_t> local(outcomes, 0);
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < blocks; ++b) {
            std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(b)));
            std::uniform_real_distribution<double> uniform(0.0, total);
            const std::int64_t count = std::min(kShotBlock, shots - b * kShotBlock);
            for (std::int64_t s = 0; s < count; ++s) {
                const double u = uniform(rng);
                auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
                if (it == cumulative.end()) {
                    --it;
                }
                ++local[static_cast<std::size_t>(it - cumulative.begin())];
            }
        }
        // Integer counts: merge order does not affect the result.
#pragma omp critical
        for (std::size_t o = 0; o < outcomes; ++o) {
            histogram[o] += local[o];
        }
    }
    return histogram;
}

SettingStats summarize(std::span<const std::int64_t> histogram, std::span<const double> values,
                       std::int64_t shots) {
    // Shift by one observed value so a single-valued sample has exactly zero spread.
    std::size_t first = 0;
    while (histogram[first] == 0) {
        ++first;
    }
    const double shift = values[first];
    const auto n = static_cast<double>(shots);
    double offset = 0.0;
    for (std::size_t o = 0; o < histogram.size(); ++o) {
        if (histogram[o] != 0) {
            offset += static_cast<double>(histogram[o]) * (values[o] - shift);
        }
    }
    const double mean = shift + offset / n;
    double m2 = 0.0;
    for (std::size_t o = 0; o < histogram.size(); ++o) {
        if (histogram[o] != 0) {
            const double d = values[o] - mean;
            m2 += static_cast<double>(histogram[o]) * d * d;
        }
    }
    SettingStats stats;
    stats.mean = mean;
    if (shots > 1) {
        stats.variance_of_mean = m2 / (n - 1.0) / n;
    } else {
        // No spread is observable from one shot; use the largest variance a
        // variable bounded by max |value| can have.
        double bound = 0.0;
        for (double v : values) {
            bound = std::max(bound, std::abs(v));
        }
        stats.variance_of_mean = bound * bound;
    }
    return stats;
}

}  // namespace

void ShotPlan::validate() const {
    if (shots_per_setting < 1) {
        throw InputError("shots_per_setting must be at least 1");
    }
}

std::vector<double> readout_probabilities(const StateVector &state, PauliAxis a) {
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    kernels::rotate_to_axis_basis(amps, state.n_qubits(), a);
    std::vector<double> probs(amps.size());
    std::transform(amps.begin(), amps.end(), probs.begin(),
                   [](const Complex &v) { return std::norm(v); });
    return probs;
}

std::vector<double> shot_values(const WitnessSpec &spec) {
    const int n = spec.n_qubits();
    std::vector<double> weights;
    std::vector<std::pair<std::size_t, std::size_t>> masks;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            weights.push_back(spec.pair_weight(i, j));
            masks.emplace_back(site_mask(n, i), site_mask(n, j));
        }
    }
    std::vector<double> values(std::size_t{1} << n);
#pragma omp parallel for schedule(static)
    for (std::int64_t o = 0; o < static_cast<std::int64_t>(values.size()); ++o) {
        const auto outcome = static_cast<std::size_t>(o);
        double v = 0.0;
        for (std::size_t p = 0; p < weights.size(); ++p) {
            const bool same = ((outcome & masks[p].first) != 0) == ((outcome & masks[p].second) != 0);
            v += same ? weights[p] : -weights[p];
        }
        values[outcome] = v;
    }
    return values;
}

WitnessEstimate estimate_witness(const StateVector &state, const WitnessSpec &spec,
                                 const ShotPlan &plan) {
    plan.validate();
    if (state.n_qubits() != spec.n_qubits()) {
        throw InputError("state and witness disagree on the number of qubits");
    }
    WitnessEstimate result;
    if (spec.coefficients().all_zero()) {
        return result;
    }
    const std::vector<double> values = shot_values(spec);
    double sigma = 0.0;
    double variance = 0.0;
    for (PauliAxis a : kPauliAxes) {
        const double c = spec.coefficients()[a];
        if (c == 0.0) {
            continue;
        }
        ++result.settings;
        std::vector<double> cumulative = readout_probabilities(state, a);
        std::partial_sum(cumulative.begin(), cumulative.end(), cumulative.begin());
        const auto histogram = sample_histogram(
            cumulative, plan.shots_per_setting, derive_seed(plan.seed, axis_index(a)));
        const SettingStats stats = summarize(histogram, values, plan.shots_per_setting);
        sigma += c * stats.mean;
        variance += c * c * stats.variance_of_mean;
    }
    result.estimate = 1.0 - sigma;
    result.std_error = std::sqrt(variance);
    return result;
}

std::vector<CurvePoint> convergence_curve(const StateVector &state, const WitnessSpec &spec,
                                          std::span<const std::int64_t> shot_grid,
                                          std::uint64_t seed) {
    if (shot_grid.empty()) {
        throw InputError("shot grid must not be empty");
    }
    std::vector<CurvePoint> curve;
    curve.reserve(shot_grid.size());
    for (std::size_t g = 0; g < shot_grid.size(); ++g) {
        const WitnessEstimate e =
            estimate_witness(state, spec, {shot_grid[g], derive_seed(seed, g)});
        curve.push_back({shot_grid[g], e.estimate, e.std_error});
    }
    return curve;
}

}  // namespace sfw
