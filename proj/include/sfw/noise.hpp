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

#include "sfw/qstate.hpp"
#include "sfw/witness.hpp"

namespace sfw {

enum class NoiseKind {
    collective, // p I/2^N + (1-p) rho
    individual, // (1-q) rho_s + q I/2 on every qubit independently
};

struct NoiseModel {
    NoiseKind kind;
    double strength;

    /// Throws InputError unless strength lies in [0, 1].
    void validate() const;
};

/// <Sigma(k)> on the noisy state: (1-p) <Sigma> for collective noise,
/// (1-q)^2 <Sigma> for individual noise (each Pauli shrinks by 1-q).
double noisy_sigma(const StateVector &state, const WitnessSpec &spec, const NoiseModel &noise);

/// Largest p with detection for p < p*: 1 - 1/<Sigma> when <Sigma> > 1, else 0.
double collective_threshold(const StateVector &state, const WitnessSpec &spec);
/// Same map applied to an exact <Sigma>.
Rational collective_threshold(const Rational &sigma);

/// 1 - 1/sqrt(<Sigma>) when <Sigma> > 1, else 0.
double individual_threshold(const StateVector &state, const WitnessSpec &spec);
double individual_threshold_from_sigma(double sigma);

struct ChannelSides {
    double observable_side; // (1-q)^2 <Sigma>
    double state_side;      // Tr(Sigma rho') after Kraus application to every qubit
};

inline constexpr int kDefaultKrausSiteCap = 8;

/// Evaluates the individually depolarized <Sigma> both ways. ResourceError above site_cap.
ChannelSides kraus_crosscheck(const StateVector &state, const WitnessSpec &spec, double q,
                              int site_cap = kDefaultKrausSiteCap);

}  // namespace sfw
