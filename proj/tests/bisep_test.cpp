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

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "sfw/bisep.hpp"
#include "sfw/errors.hpp"

using namespace sfw;

namespace {

const WitnessSpec kPi4(4, Angle::pi_times(1), {1, 1, 1});

SeesawOptions quick(int restarts = 20, std::uint64_t seed = 5) { return {restarts, 1e-10, 500, seed}; }

double top_eigenvalue(const WitnessSpec &spec) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sigma_operator(spec), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(es.eigenvalues().size() - 1);
}

}  // namespace

TEST(bisep, EnumeratesCanonicalCuts) {
    const auto three = enumerate_bipartitions(3);
    ASSERT_EQ(three.size(), 3u);
    EXPECT_EQ(three[0].to_string(), "{1}|{2,3}");
    EXPECT_EQ(three[1].to_string(), "{1,2}|{3}");
    EXPECT_EQ(three[2].to_string(), "{1,3}|{2}");
    EXPECT_EQ(enumerate_bipartitions(2).size(), 1u);
    EXPECT_EQ(enumerate_bipartitions(4).size(), 7u);
    EXPECT_EQ(enumerate_bipartitions(6).size(), 31u);
    for (const auto &cut : enumerate_bipartitions(5)) {
        EXPECT_EQ(cut.part_a.front(), 0);
        EXPECT_EQ(cut.part_a.size() + cut.part_b.size(), 5u);
    }
    EXPECT_THROW(enumerate_bipartitions(1), InputError);
}

TEST(bisep, BipartitionValidation) {
    EXPECT_THROW(Bipartition::from_part_a(3, {}), InputError);
    EXPECT_THROW(Bipartition::from_part_a(3, {0, 1, 2}), InputError);
    EXPECT_THROW(Bipartition::from_part_a(3, {3}), InputError);
    EXPECT_EQ(Bipartition::from_part_a(3, {1, 2}), Bipartition::from_part_a(3, {0}));
}

TEST(bisep, TwoQubitProductValueIsOne) {
    const WitnessSpec spec(2, Angle{}, {1, 1, 1});
    const auto r = seesaw_max(spec, enumerate_bipartitions(2)[0], quick());
    EXPECT_NEAR(r.bound, 1.0, 1e-9);
    EXPECT_NEAR(r.bound, oracle::grid_cut_max(spec, 0), 1e-3);
    EXPECT_NEAR(product_bound(spec, quick()), 1.0, 1e-9);
    EXPECT_NEAR(bisep_bound(spec, quick()).bound, r.bound, 1e-12);
}

TEST(bisep, ZeroOperatorGivesZero) {
    const WitnessSpec spec(3, Angle{}, {0, 0, 0});
    EXPECT_NEAR(bisep_bound(spec, quick(3)).bound, 0.0, 1e-15);
    EXPECT_NEAR(product_bound(spec, quick(3)), 0.0, 1e-15);
}

TEST(bisep, HistoryIsMonotone) {
    const auto r = seesaw_max(kPi4, Bipartition::from_part_a(4, {0, 1}), quick());
    ASSERT_GE(r.history.size(), 2u);
    for (std::size_t i = 1; i < r.history.size(); ++i) {
        EXPECT_GE(r.history[i], r.history[i - 1] - 1e-12);
    }
}

TEST(bisep, SeedReproducesResult) {
    const auto a = bisep_bound(kPi4, quick(10, 9));
    const auto b = bisep_bound(kPi4, quick(10, 9));
    EXPECT_EQ(a.bound, b.bound);
    EXPECT_EQ(a.best_cut, b.best_cut);
    EXPECT_EQ(a.iterations, b.iterations);
    for (std::size_t x = 0; x < 16; ++x) {
        EXPECT_EQ(a.assembled()[x], b.assembled()[x]);
    }
}

TEST(bisep, BoundIsAttainedByStoredState) {
    const auto r = bisep_bound(kPi4, quick());
    EXPECT_NEAR(sigma_value(r.assembled(), kPi4), r.bound, 1e-9);
    EXPECT_NEAR(oracle::expectation(r.assembled(), oracle::dense_sigma(kPi4)), r.bound, 1e-9);
    EXPECT_EQ(r.restarts_used, 20 * 7);
    EXPECT_TRUE(r.converged);
}

TEST(bisep, SandwichBetweenProductAndSpectrum) {
    for (const WitnessSpec &spec : {kPi4, WitnessSpec(4, Angle{}, {1, 1, -1}),
                                    WitnessSpec(5, Angle::pi_times(1, 2), {0.4, -1, 0.7})}) {
        const double prod = product_bound(spec, quick());
        const double bis = bisep_bound(spec, quick()).bound;
        EXPECT_LE(prod, bis + 1e-9);
        EXPECT_LE(bis, top_eigenvalue(spec) + 1e-9);
        EXPECT_LE(prod, 1.0 + 1e-6);
    }
    EXPECT_GE(product_bound(WitnessSpec(4, Angle{}, {1, 1, -1}), quick()), 0.99);
}

TEST(bisep, SmallRegistersMatchGridSearch) {
    for (int n : {2, 3}) {
        for (const WitnessSpec &spec :
             {WitnessSpec(n, Angle{}, {1, 1, 1}), WitnessSpec(n, Angle::pi_times(1), {1, 1, 1}),
              WitnessSpec(n, Angle{}, {1, -0.5, -1}), WitnessSpec(n, Angle::radians(0.7), {0.3, 1, -0.8})}) {
            double grid = -1e300;
            for (int lone = 0; lone < n; ++lone) {
                grid = std::max(grid, oracle::grid_cut_max(spec, lone, 90));
            }
            const double found = bisep_bound(spec, quick()).bound;
            EXPECT_NEAR(found, grid, 1e-3);
            EXPECT_GE(found, grid - 1e-9);
        }
    }
}

TEST(bisep, FourQubitPhasedDickeIsGenuinelyEntangled) {
    const auto r = bisep_bound(kPi4, quick(40));
    EXPECT_NEAR(r.bound, 1.187, 0.01);
    EXPECT_TRUE(gme_detected(make_phased_dicke(4, 2), kPi4, r));
    EXPECT_FALSE(gme_detected(make_basis_state(4, "0101"), kPi4, r));
    EXPECT_THROW(gme_detected(make_phased_dicke(4, 2), WitnessSpec(4, Angle{}, {1, 1, 1}), r), InputError);
}

TEST(bisep, RejectsLargeRegisters) {
    EXPECT_THROW(bisep_bound(WitnessSpec(13, Angle{}, {1, 1, 1}), quick(1)), ResourceError);
}
