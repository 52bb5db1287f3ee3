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
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "sfw/errors.hpp"
#include "sfw/noise.hpp"

using namespace sfw;

namespace {

const WitnessSpec kTilde4(4, Angle{}, {1, 1, -1});
const WitnessSpec kPi4(4, Angle::pi_times(1), {1, 1, 1});
const WitnessSpec kPi6(6, Angle::pi_times(1), {1, 1, 1});

}  // namespace

TEST(noise, ModelValidation) {
    EXPECT_THROW((NoiseModel{NoiseKind::collective, -0.1}.validate()), InputError);
    EXPECT_THROW((NoiseModel{NoiseKind::individual, 1.01}.validate()), InputError);
    EXPECT_NO_THROW((NoiseModel{NoiseKind::individual, 1.0}.validate()));
}

TEST(noise, NoisySigmaExamples) {
    const StateVector d42 = make_dicke(4, 2);
    const double collective = noisy_sigma(d42, kTilde4, {NoiseKind::collective, 0.5});
    EXPECT_NEAR(collective, 5.0 / 6.0, 1e-14);
    EXPECT_NEAR(collective, sigma_value(mix_with_white_noise(d42, 0.5), kTilde4), 1e-14);
    EXPECT_EQ(noisy_sigma(d42, kTilde4, {NoiseKind::individual, 1.0}), 0.0);
    EXPECT_NEAR(noisy_sigma(make_phased_dicke(4, 2), kPi4, {NoiseKind::individual, 0.1}),
                0.81 * 13.0 / 9.0, 1e-14);
}

TEST(noise, CollectiveNoiseIsAffine) {
    const StateVector d = make_phased_dicke(4, 2);
    const double s0 = sigma_value(d, kPi4);
    for (int i = 0; i <= 10; ++i) {
        const double p = i / 10.0;
        EXPECT_NEAR(noisy_sigma(d, kPi4, {NoiseKind::collective, p}), (1 - p) * s0, 1e-14);
    }
}

TEST(noise, MonotoneInStrength) {
    const StateVector d = make_dicke(4, 2);
    for (NoiseKind kind : {NoiseKind::collective, NoiseKind::individual}) {
        double prev = 1e300;
        for (int i = 0; i <= 20; ++i) {
            const double v = noisy_sigma(d, kTilde4, {kind, i / 20.0});
            EXPECT_LE(v, prev);
            prev = v;
        }
    }
}

TEST(noise, CollectiveThresholds) {
    for (int n = 2; n <= 10; n += 2) {
        const WitnessSpec t(n, Angle{}, {1, 1, -1});
        const WitnessSpec p(n, Angle::pi_times(1), {1, 1, 0});
        EXPECT_NEAR(collective_threshold(make_dicke(n, n / 2), t), 2.0 / (n + 1), 1e-12);
        EXPECT_NEAR(collective_threshold(make_phased_dicke(n, n / 2), p), 1.0 / n, 1e-12);
        EXPECT_EQ(collective_threshold(dicke_sigma_closed_form(n, n / 2)), Rational(2, n + 1));
    }
    EXPECT_NEAR(collective_threshold(make_phased_dicke(4, 2), kPi4), 4.0 / 13.0, 1e-12);
    EXPECT_NEAR(collective_threshold(make_phased_dicke(6, 3), kPi6), 6.0 / 31.0, 1e-12);
    EXPECT_EQ(collective_threshold(Rational(13, 9)), Rational(4, 13));
    EXPECT_EQ(collective_threshold(Rational(31, 25)), Rational(6, 31));
    EXPECT_EQ(collective_threshold(Rational(1)), Rational(0));
    EXPECT_EQ(collective_threshold(make_dicke(4, 2), kPi4), 0.0);
}

TEST(noise, IndividualThresholds) {
    for (int n = 2; n <= 10; n += 2) {
        const WitnessSpec t(n, Angle{}, {1, 1, -1});
        const WitnessSpec p(n, Angle::pi_times(1), {1, 1, 0});
        EXPECT_NEAR(individual_threshold(make_dicke(n, n / 2), t), 1 - std::sqrt((n - 1.0) / (n + 1.0)),
                    1e-12);
        EXPECT_NEAR(individual_threshold(make_phased_dicke(n, n / 2), p), 1 - std::sqrt((n - 1.0) / n),
                    1e-12);
    }
    EXPECT_NEAR(individual_threshold(make_phased_dicke(4, 2), kPi4), 1 - 3 / std::sqrt(13.0), 1e-12);
    EXPECT_NEAR(individual_threshold(make_phased_dicke(6, 3), kPi6), 1 - 5 / std::sqrt(31.0), 1e-12);
    EXPECT_EQ(individual_threshold_from_sigma(0.7), 0.0);
}

TEST(noise, ZTermImprovesRobustness) {
    for (int n = 2; n <= 10; n += 2) {
        const StateVector d = make_dicke(n, n / 2);
        const WitnessSpec with(n, Angle{}, {1, 1, -1});
        const WitnessSpec without(n, Angle{}, {1, 1, 0});
        EXPECT_GT(collective_threshold(d, with), collective_threshold(d, without));
        EXPECT_GT(individual_threshold(d, with), individual_threshold(d, without));
    }
    for (auto [n, spec] : {std::pair{4, kPi4}, std::pair{6, kPi6}}) {
        const StateVector d = make_phased_dicke(n, n / 2);
        const WitnessSpec without(n, Angle::pi_times(1), {1, 1, 0});
        EXPECT_GT(collective_threshold(d, spec), collective_threshold(d, without));
        EXPECT_GT(individual_threshold(d, spec), individual_threshold(d, without));
    }
}

TEST(noise, ThresholdMatchesDetectionScan) {
    for (auto [state, spec] : {std::pair{make_dicke(4, 2), kTilde4},
                               std::pair{make_phased_dicke(4, 2), kPi4}}) {
        const double p_star = collective_threshold(state, spec);
        for (int i = 0; i <= 1000; ++i) {
            const double p = i * 1e-3;
            if (std::abs(p - p_star) < 1e-9) {
                continue;
            }
            EXPECT_EQ(detects(mix_with_white_noise(state, p), spec), p < p_star) << p;
        }
    }
}

TEST(noise, KrausChannelMatchesFactorLaw) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 5;
        const StateVector s = oracle::random_state(n, rng);
        const WitnessSpec spec(n, Angle::radians(3 * u(rng)), {u(rng), u(rng), u(rng)});
        const double q = (t % 11) / 10.0;
        const auto sides = kraus_crosscheck(s, spec, q);
        EXPECT_NEAR(sides.observable_side, sides.state_side, 1e-12);
        EXPECT_NEAR(sides.observable_side, (1 - q) * (1 - q) * sigma_value(s, spec), 1e-14);
    }
    const auto w = kraus_crosscheck(make_dicke(3, 1), WitnessSpec(3, Angle{}, {1, 1, -1}), 0.3);
    EXPECT_NEAR(w.observable_side, w.state_side, 1e-12);
    const auto d = kraus_crosscheck(make_phased_dicke(4, 2), kPi4, 0.5);
    EXPECT_NEAR(d.state_side, 0.25 * 13.0 / 9.0, 1e-12);
    EXPECT_THROW(kraus_crosscheck(make_dicke(9, 1), WitnessSpec(9, Angle{}, {1, 1, 1}), 0.1),
                 ResourceError);
}
