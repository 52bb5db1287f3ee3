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
 * Data-parallel inner loops over 2^N amplitudes and 2^N x 2^N matrices.
 *
 * Every kernel in sfw::kernels has a serial counterpart in
 * sfw::kernels::serial with the same signature. The serial versions are
 * plain loops kept as the reference for tests and benchmarks.
 *
 * Parallel reductions split the index range into fixed-size chunks, reduce
 * each chunk in index order and then add the chunk sums in chunk order, so
 * results do not depend on the OpenMP thread count.
 */

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sfw/pauli.hpp"

namespace sfw::kernels {

using Complex = std::complex<double>;

inline constexpr std::size_t kReductionChunk = std::size_t{1} << 11;

/// One weighted Pauli pair coeff * sigma_i^axis sigma_j^axis (0-based sites).
struct PairTerm {
    int site_i;
    int site_j;
    PauliAxis axis_i;
    PauliAxis axis_j;
    double coeff;
};

/// Whether the Pauli operator flips the computational basis bit.
constexpr bool flips(PauliAxis a) { return a != PauliAxis::z; }

/// Phase picked up by sigma^a acting on basis bit `bit`:
/// X -> 1, Y -> (bit ? -i : i), Z -> (bit ? -1 : 1).
inline Complex pauli_phase(PauliAxis a, bool bit) {
    switch (a) {
    case PauliAxis::x:
        return {1.0, 0.0};
    case PauliAxis::y:
        return bit ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
    case PauliAxis::z:
        break;
    }
    return bit ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
}

/// Number of OpenMP threads in use (1 without OpenMP).
int thread_count();

/// <psi| sigma_i^a sigma_j^b |psi>, sites 0-based and distinct.
Complex pauli_pair_expectation(std::span<const Complex> psi, int n_qubits, int site_i,
                               int site_j, PauliAxis a, PauliAxis b);

/// Tr(rho sigma_i^a sigma_j^b).
Complex pauli_pair_trace(const Eigen::MatrixXcd &rho, int n_qubits, int site_i, int site_j,
                         PauliAxis a, PauliAxis b);

/// J_a |psi> with J_a = 1/2 sum_s sigma_s^a.
std::vector<Complex> apply_collective_spin(std::span<const Complex> psi, int n_qubits,
                                           PauliAxis a);

/// Tr(rho J_a^2), evaluated by applying J_a twice to each column.
Complex collective_spin_sq_trace(const Eigen::MatrixXcd &rho, int n_qubits, PauliAxis a);

/// Dense sum of the given Pauli pair terms.
Eigen::MatrixXcd pair_operator(int n_qubits, std::span<const PairTerm> terms);

/// Applies the single-qubit change of basis mapping the +1 eigenvector of
/// sigma^a to |0> (identity for z, H for x, H S^dagger for y) on every qubit.
void rotate_to_axis_basis(std::span<Complex> psi, int n_qubits, PauliAxis a);

/// rho -> sum_k K_k rho K_k^dagger with the depolarizing Kraus set
/// {sqrt(1-3q/4) I, sqrt(q/4) X, sqrt(q/4) Y, sqrt(q/4) Z} on one site.
void apply_depolarizing(Eigen::MatrixXcd &rho, int n_qubits, int site, double q);

/// Effective operator on one subsystem:
///   H[y, x] = sum_{u, v} conj(rest[u]) op[part[y] | rest_off[u], part[x] | rest_off[v]] rest[v]
/// where part_offsets / rest_offsets give the full-register bits contributed by a
/// local configuration of the subsystem / its complement.
Eigen::MatrixXcd contract_operator(const Eigen::MatrixXcd &op,
                                   std::span<const std::size_t> part_offsets,
                                   std::span<const std::size_t> rest_offsets,
                                   std::span<const Complex> rest_state);

namespace serial {

Complex pauli_pair_expectation(std::span<const Complex> psi, int n_qubits, int site_i,
                               int site_j, PauliAxis a, PauliAxis b);
Complex pauli_pair_trace(const Eigen::MatrixXcd &rho, int n_qubits, int site_i, int site_j,
                         PauliAxis a, PauliAxis b);
std::vector<Complex> apply_collective_spin(std::span<const Complex> psi, int n_qubits,
                                           PauliAxis a);
Complex collective_spin_sq_trace(const Eigen::MatrixXcd &rho, int n_qubits, PauliAxis a);
Eigen::MatrixXcd pair_operator(int n_qubits, std::span<const PairTerm> terms);
void rotate_to_axis_basis(std::span<Complex> psi, int n_qubits, PauliAxis a);
void apply_depolarizing(Eigen::MatrixXcd &rho, int n_qubits, int site, double q);
Eigen::MatrixXcd contract_operator(const Eigen::MatrixXcd &op,
                                   std::span<const std::size_t> part_offsets,
                                   std::span<const std::size_t> rest_offsets,
                                   std::span<const Complex> rest_state);

}  // namespace serial

}  // namespace sfw::kernels
