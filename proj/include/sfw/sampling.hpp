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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sfw/qstate.hpp"
#include "sfw/witness.hpp"

namespace sfw {

/// Finite-shot measurement budget. Every nonzero c_a costs one setting: all
/// qubits read out in the a basis, shots_per_setting times.
struct ShotPlan {
    std::int64_t shots_per_setting = 1000;
    std::uint64_t seed = 0;

    void validate() const;
};

struct WitnessEstimate {
    double estimate = 1.0;  // plug-in estimate of <W(k)>
    double std_error = 0.0; // from the per-shot sample variance of each setting
    int settings = 0;       // measurement settings simulated (<= 3)
};

/// Shots are drawn in fixed blocks; block b of the setting for axis a uses the
/// generator seeded with derive_seed(derive_seed(seed, a), b).
inline constexpr std::int64_t kShotBlock = 1 << 14;

/// Simulated estimate of the witness from projective readouts.
WitnessEstimate estimate_witness(const StateVector &state, const WitnessSpec &spec,
                                 const ShotPlan &plan);

struct CurvePoint {
    std::int64_t shots;
    double estimate;
    double std_error;
};

/// One estimate per grid entry; entry g is seeded with derive_seed(seed, g).
std::vector<CurvePoint> convergence_curve(const StateVector &state, const WitnessSpec &spec,
                                          std::span<const std::int64_t> shot_grid,
                                          std::uint64_t seed);

/// Outcome distribution of reading every qubit in the a basis (outcome bit 0
/// means eigenvalue +1).
std::vector<double> readout_probabilities(const StateVector &state, PauliAxis a);

/// Value of sum_{i<j} w_ij s_i s_j (w from the spec, s = +/-1) for every outcome.
std::vector<double> shot_values(const WitnessSpec &spec);

}  // namespace sfw
