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

// Reference implementations: straight loops in index order, no OpenMP.

#include <cmath>

#include "sfw/kernels.hpp"
#include "sfw/qstate.hpp"

namespace sfw::kernels::serial {

Complex pauli_pair_expectation(std::span<const Complex> psi, int n_qubits, int site_i,
                               int site_j, PauliAxis a, PauliAxis b) {
    const std::size_t mi = site_mask(n_qubits, site_i);
    const std::size_t mj = site_mask(n_qubits, site_j);
    const std::size_t flip = (flips(a) ? mi : 0) | (flips(b) ? mj : 0);
    Complex sum = 0.0;
    for (std::size_t x = 0; x < psi.size(); ++x) {
        sum += std::conj(psi[x ^ flip]) * pauli_phase(a, (x & mi) != 0) *
               pauli_phase(b, (x & mj) != 0) * psi[x];
    }
    return sum;
}

Complex pauli_pair_trace(const Eigen::MatrixXcd &rho, int n_qubits, int site_i, int site_j,
                         PauliAxis a, PauliAxis b) {
    const std::size_t mi = site_mask(n_qubits, site_i);
    const std::size_t mj = site_mask(n_qubits, site_j);
    const std::size_t flip = (flips(a) ? mi : 0) | (flips(b) ? mj : 0);
    Complex sum = 0.0;
    const auto dim = static_cast<std::size_t>(rho.rows());
    for (std::size_t x = 0; x < dim; ++x) {
        sum += rho(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x ^ flip)) *
               pauli_phase(a, (x & mi) != 0) * pauli_phase(b, (x & mj) != 0);
    }
    return sum;
}

std::vector<Complex> apply_collective_spin(std::span<const Complex> psi, int n_qubits,
                                           PauliAxis a) {
    std::vector<Complex> out(psi.size());
    for (int s = 0; s < n_qubits; ++s) {
        const std::size_t m = site_mask(n_qubits, s);
        const std::size_t flip = flips(a) ? m : 0;
        for (std::size_t x = 0; x < psi.size(); ++x) {
            out[x ^ flip] += 0.5 * pauli_phase(a, (x & m) != 0) * psi[x];
        }
    }
    return out;
}

Complex collective_spin_sq_trace(const Eigen::MatrixXcd &rho, int n_qubits, PauliAxis a) {
    const auto dim = static_cast<std::size_t>(rho.rows());
    Complex sum = 0.0;
    std::vector<Complex> column(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t r = 0; r < dim; ++r) {
            column[r] = rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
        const auto once = apply_collective_spin(column, n_qubits, a);
        const auto twice = apply_collective_spin(once, n_qubits, a);
        sum += twice[c];
    }
    return sum;
}

Eigen::MatrixXcd pair_operator(int n_qubits, std::span<const PairTerm> terms) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &t : terms) {
        const std::size_t mi = site_mask(n_qubits, t.site_i);
        const std::size_t mj = site_mask(n_qubits, t.site_j);
        const std::size_t flip = (flips(t.axis_i) ? mi : 0) | (flips(t.axis_j) ? mj : 0);
        for (std::size_t x = 0; x < static_cast<std::size_t>(dim); ++x) {
            op(static_cast<Eigen::Index>(x ^ flip), static_cast<Eigen::Index>(x)) +=
                t.coeff * pauli_phase(t.axis_i, (x & mi) != 0) *
                pauli_phase(t.axis_j, (x & mj) != 0);
        }
    }
    return op;
}

void rotate_to_axis_basis(std::span<Complex> psi, int n_qubits, PauliAxis a) {
    if (a == PauliAxis::z) {
        return;
    }
    const double h = 1.0 / std::sqrt(2.0);
    const Complex g01 = a == PauliAxis::x ? Complex{h, 0.0} : Complex{0.0, -h};
    const Complex g11 = a == PauliAxis::x ? Complex{-h, 0.0} : Complex{0.0, h};
    for (int s = 0; s < n_qubits; ++s) {
        const std::size_t m = site_mask(n_qubits, s);
        for (std::size_t x = 0; x < psi.size(); ++x) {
            if (x & m) {
                continue;
            }
            const Complex a0 = psi[x];
            const Complex a1 = psi[x | m];
            psi[x] = h * a0 + g01 * a1;
            psi[x | m] = h * a0 + g11 * a1;
        }
    }
}

void apply_depolarizing(Eigen::MatrixXcd &rho, int n_qubits, int site, double q) {
    Eigen::Matrix2cd kraus[4];
    kraus[0] = std::sqrt(1.0 - 0.75 * q) * Eigen::Matrix2cd::Identity();
    kraus[1] << 0.0, 1.0, 1.0, 0.0;
    kraus[2] << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    kraus[3] << 1.0, 0.0, 0.0, -1.0;
    for (int k = 1; k < 4; ++k) {
        kraus[k] *= std::sqrt(0.25 * q);
    }
    const std::size_t m = site_mask(n_qubits, site);
    const Eigen::MatrixXcd in = rho;
    const auto dim = static_cast<std::size_t>(rho.rows());
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const int rb = (r & m) ? 1 : 0;
            const int cb = (c & m) ? 1 : 0;
            Complex acc = 0.0;
            for (const auto &k : kraus) {
                for (int rp = 0; rp < 2; ++rp) {
                    for (int cp = 0; cp < 2; ++cp) {
                        const std::size_t r2 = rp ? (r | m) : (r & ~m);
                        const std::size_t c2 = cp ? (c | m) : (c & ~m);
                        acc += k(rb, rp) *
                               in(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2)) *
                               std::conj(k(cb, cp));
                    }
                }
            }
            rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
        }
    }
}

Eigen::MatrixXcd contract_operator(const Eigen::MatrixXcd &op,
                                   std::span<const std::size_t> part_offsets,
                                   std::span<const std::size_t> rest_offsets,
                                   std::span<const Complex> rest_state) {
    const auto dp = static_cast<Eigen::Index>(part_offsets.size());
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dp, dp);
    for (Eigen::Index y = 0; y < dp; ++y) {
        for (Eigen::Index x = 0; x < dp; ++x) {
            Complex acc = 0.0;
            for (std::size_t u = 0; u < rest_offsets.size(); ++u) {
                for (std::size_t v = 0; v < rest_offsets.size(); ++v) {
                    const auto row =
                        static_cast<Eigen::Index>(part_offsets[static_cast<std::size_t>(y)] |
                                                  rest_offsets[u]);
                    const auto col =
                        static_cast<Eigen::Index>(part_offsets[static_cast<std::size_t>(x)] |
                                                  rest_offsets[v]);
                    acc += std::conj(rest_state[u]) * op(row, col) * rest_state[v];
                }
            }
            h(y, x) = acc;
        }
    }
    return h;
}

}  // namespace sfw::kernels::serial
