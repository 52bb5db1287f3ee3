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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "sfw/errors.hpp"
#include "sfw/sampling.hpp"
#include "sfw/seed.hpp"

using namespace sfw;

namespace {

const WitnessSpec kTilde4(4, Angle{}, {1, 1, -1});
const WitnessSpec kPi4(4, Angle::pi_times(1), {1, 1, 1});

}  // namespace

TEST(sampling, PlanValidation) {
    EXPECT_THROW((ShotPlan{0, 1}.validate()), InputError);
    EXPECT_NO_THROW((ShotPlan{1, 1}.validate()));
}

TEST(sampling, ReadoutProbabilitiesSumToOne) {
    const StateVector d = make_phased_dicke(4, 2);
    for (PauliAxis a : kPauliAxes) {
        double total = 0.0;
        for (double p : readout_probabilities(d, a)) {
            EXPECT_GE(p, 0.0);
            total += p;
        }
        EXPECT_NEAR(total, 1.0, 1e-14);
    }
    // |0> along z and |+>-type along x
    EXPECT_NEAR(readout_probabilities(make_basis_state(1, "0"), PauliAxis::z)[0], 1.0, 1e-15);
    EXPECT_NEAR(readout_probabilities(make_basis_state(1, "0"), PauliAxis::x)[0], 0.5, 1e-15);
}

TEST(sampling, ShotValuesReproduceSigma) {
    const StateVector d = make_phased_dicke(4, 2);
    const auto values = shot_values(kPi4);
    ASSERT_EQ(values.size(), 16u);
    double sigma = 0.0;
    for (PauliAxis a : kPauliAxes) {
        const auto p = readout_probabilities(d, a);
        for (std::size_t x = 0; x < 16; ++x) {
            sigma += kPi4.coefficients()[a] * p[x] * values[x];
        }
    }
    EXPECT_NEAR(sigma, 13.0 / 9.0, 1e-14);
}

TEST(sampling, EstimateAtManyShots) {
    for (auto [state, spec] : {std::pair{make_dicke(4, 2), kTilde4},
                               std::pair{make_phased_dicke(4, 2), kPi4}}) {
        const auto e = estimate_witness(state, spec, {1000000, 17});
        EXPECT_EQ(e.settings, 3);
        EXPECT_LT(std::abs(e.estimate - witness_value(state, spec)), 5 * e.std_error);
    }
}

TEST(sampling, DeterministicOutcomesHaveZeroError) {
    const auto e = estimate_witness(make_basis_state(4, "0000"), WitnessSpec(4, Angle{}, {0, 0, 1}),
                                    {5000, 3});
    EXPECT_EQ(e.settings, 1);
    EXPECT_EQ(e.std_error, 0.0);
    EXPECT_NEAR(e.estimate, 0.0, 1e-15);
}

TEST(sampling, SingleShotErrorIsFinite) {
    const auto e = estimate_witness(make_dicke(4, 2), kTilde4, {1, 3});
    EXPECT_GT(e.std_error, 0.0);
    EXPECT_TRUE(std::isfinite(e.std_error));
}

TEST(sampling, EmptyCoefficientsGiveOne) {
    const WitnessSpec none(4, Angle{}, {0, 0, 0});
    const std::vector<std::int64_t> grid{10, 100};
    for (const auto &p : convergence_curve(make_dicke(4, 2), none, grid, 1)) {
        EXPECT_EQ(p.estimate, 1.0);
        EXPECT_EQ(p.std_error, 0.0);
    }
    EXPECT_EQ(estimate_witness(make_dicke(4, 2), none, {10, 1}).settings, 0);
}

TEST(sampling, SameSeedSameOutput) {
    const auto a = estimate_witness(make_phased_dicke(4, 2), kPi4, {40000, 99});
    const auto b = estimate_witness(make_phased_dicke(4, 2), kPi4, {40000, 99});
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_EQ(a.std_error, b.std_error);
    const auto c = estimate_witness(make_phased_dicke(4, 2), kPi4, {40000, 100});
    EXPECT_NE(a.estimate, c.estimate);
}

TEST(sampling, UnbiasedOverSeeds) {
    const StateVector d = make_phased_dicke(4, 2);
    const double exact = witness_value(d, kPi4);
    double mean = 0.0;
    double pooled = 0.0;
    const int runs = 100;
    for (int s = 0; s < runs; ++s) {
        const auto e = estimate_witness(d, kPi4, {2000, derive_seed(1234, static_cast<std::uint64_t>(s))});
        mean += e.estimate / runs;
        pooled += e.std_error * e.std_error;
    }
    const double se_of_mean = std::sqrt(pooled) / runs;
    EXPECT_LT(std::abs(mean - exact), 3 * se_of_mean);
}

TEST(sampling, ConvergenceCurveScaling) {
    const StateVector d = make_phased_dicke(4, 2);
    const std::vector<std::int64_t> grid{100, 1000, 10000, 100000, 1000000};
    const auto curve = convergence_curve(d, kPi4, grid, 8);
    ASSERT_EQ(curve.size(), grid.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto &p : curve) {
        const double x = std::log(static_cast<double>(p.shots));
        const double y = std::log(p.std_error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(curve.size());
    EXPECT_NEAR((m * sxy - sx * sy) / (m * sxx - sx * sx), -0.5, 0.1);
    const std::vector<std::int64_t> one{10000};
    const auto p = convergence_curve(d, kPi4, one, 8)[0];
    EXPECT_LT(std::abs(p.estimate + 4.0 / 9.0), 3 * p.std_error);
}
