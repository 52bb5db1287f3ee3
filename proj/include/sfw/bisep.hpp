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

/**
 * @file
 * Numerical maximization of <Sigma(k)> over pure states that factorize across
 * a bipartition (biseparable bound) or across every qubit (product bound).
 *
 * The optimizer is an alternating ("see-saw") ascent: all factors but one are
 * held fixed, the dense Sigma operator is contracted against them to an
 * effective Hermitian operator on the free factor, and the free factor is
 * replaced by that operator's top eigenvector. Each update maximizes exactly
 * over its factor, so the objective never decreases. Random restarts guard
 * against local maxima; the result is a lower estimate of the true maximum.
 *
 * Because <Sigma> is linear in the state, the maximum over mixtures of
 * biseparable states is attained on a pure state that factorizes across a
 * single cut, so maximizing over cuts and pure factors suffices.
 */

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sfw/qstate.hpp"
#include "sfw/witness.hpp"

namespace sfw {

/// Split of the sites into two nonempty groups. Sites are 0-based; the
/// canonical form keeps site 0 in part_a.
struct Bipartition {
    std::vector<int> part_a;
    std::vector<int> part_b;

    /// Builds the cut from part_a; throws InputError for empty/full or out-of-range parts.
    static Bipartition from_part_a(int n_qubits, std::vector<int> part_a);

    /// 1-based ket labels, e.g. "{1,3}|{2}".
    std::string to_string() const;

    bool operator==(const Bipartition &) const = default;
};

/// All 2^(N-1) - 1 canonical cuts. Part a is {site 0} plus the sites 1..N-1
/// selected by the bits of a counter running from 0 to 2^(N-1) - 2.
std::vector<Bipartition> enumerate_bipartitions(int n_qubits);

struct SeesawOptions {
    int restarts = 200;
    double tol = 1e-10;
    int max_iter = 500;
    std::uint64_t seed = 0;
};

/// One see-saw ascent from a given starting point.
struct SeesawRun {
    double value = 0.0;
    std::vector<StateVector> factors;
    int iterations = 0; // full sweeps over all factors
    bool converged = false;
    std::vector<double> history; // objective after every single-factor update
};

/// Runs the alternating ascent on `op` (dimension 2^n_qubits) for the given
/// site groups, starting from `initial` (one state per group).
SeesawRun seesaw_run(const Eigen::MatrixXcd &op, int n_qubits,
                     std::span<const std::vector<int>> parts, std::vector<StateVector> initial,
                     double tol, int max_iter);

struct BisepResult {
    double bound = 0.0;
    Bipartition best_cut;
    std::vector<StateVector> best_state; // factor on part_a, factor on part_b
    int restarts_used = 0;
    bool converged = false;
    int iterations = 0;
    std::vector<double> history; // of the winning restart
    int n_qubits = 0;
    WitnessSpec spec;

    /// best_state[0] (x) best_state[1] on the full register.
    StateVector assembled() const;
};

/// Per-restart generator seed, derive_seed(seed, restart).
std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t restart);

/// Normalized complex-Gaussian amplitudes.
StateVector random_state(int n_qubits, std::mt19937_64 &rng);

/// Best see-saw value across `restarts` random starts for one cut. N <= 12.
BisepResult seesaw_max(const WitnessSpec &spec, const Bipartition &cut,
                       const SeesawOptions &options = {});

/// Maximum of seesaw_max over every canonical cut.
BisepResult bisep_bound(const WitnessSpec &spec, const SeesawOptions &options = {});

/// Best see-saw value over fully product pure states (one factor per qubit).
double product_bound(const WitnessSpec &spec, const SeesawOptions &options = {});

/// sigma_value(state) > bisep.bound + tol. Throws InputError if the result
/// was computed for a different spec.
bool gme_detected(const StateVector &state, const WitnessSpec &spec, const BisepResult &bisep,
                  double tol = kDetectionTolerance);

/// Same witness (qubit count, k, coefficients and positions).
bool same_spec(const WitnessSpec &a, const WitnessSpec &b);

}  // namespace sfw
