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
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sfw/kernels.hpp"
#include "sfw/qstate.hpp"

namespace sfw::kernels {

namespace {

using Index = std::int64_t;

template <class Term> Complex chunked_sum(std::size_t count, Term &&term) {
    const std::size_t chunks = (count + kReductionChunk - 1) / kReductionChunk;
    std::vector<Complex> partial(chunks);
#pragma omp parallel for schedule(static)
    for (Index c = 0; c < static_cast<Index>(chunks); ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kReductionChunk;
        const std::size_t end = std::min(count, begin + kReductionChunk);
        Complex s = 0.0;
        for (std::size_t x = begin; x < end; ++x) {
            s += term(x);
        }
        partial[static_cast<std::size_t>(c)] = s;
    }
    Complex total = 0.0;
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

// Inserts a zero at bit position `bit` of i.
inline std::size_t insert_zero(std::size_t i, std::size_t mask) {
    const std::size_t low = i & (mask - 1);
    return ((i - low) << 1) | low;
}

}  // namespace

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Complex pauli_pair_expectation(std::span<const Complex> psi, int n_qubits, int site_i,
                               int site_j, PauliAxis a, PauliAxis b) {
    const std::size_t mi = site_mask(n_qubits, site_i);
    const std::size_t mj = site_mask(n_qubits, site_j);
    const std::size_t flip = (flips(a) ? mi : 0) | (flips(b) ? mj : 0);
    return chunked_sum(psi.size(), [&](std::size_t x) {
        return std::conj(psi[x ^ flip]) * pauli_phase(a, (x & mi) != 0) *
               pauli_phase(b, (x & mj) != 0) * psi[x];
    });
}

Complex pauli_pair_trace(const Eigen::MatrixXcd &rho, int n_qubits, int site_i, int site_j,
                         PauliAxis a, PauliAxis b) {
    const std::size_t mi = site_mask(n_qubits, site_i);
    const std::size_t mj = site_mask(n_qubits, site_j);
    const std::size_t flip = (flips(a) ? mi : 0) | (flips(b) ? mj : 0);
    return chunked_sum(static_cast<std::size_t>(rho.rows()), [&](std::size_t x) {
        return rho(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x ^ flip)) *
               pauli_phase(a, (x & mi) != 0) * pauli_phase(b, (x & mj) != 0);
    });
}

std::vector<Complex> apply_collective_spin(std::span<const Complex> psi, int n_qubits,
                                           PauliAxis a) {
    std::vector<Complex> out(psi.size());
    const bool f = flips(a);
#pragma omp parallel for schedule(static)
    for (Index y = 0; y < static_cast<Index>(psi.size()); ++y) {
        Complex acc = 0.0;
        for (int s = 0; s < n_qubits; ++s) {
            const std::size_t m = site_mask(n_qubits, s);
            const std::size_t x = static_cast<std::size_t>(y) ^ (f ? m : 0);
            acc += pauli_phase(a, (x & m) != 0) * psi[x];
        }
        out[static_cast<std::size_t>(y)] = 0.5 * acc;
    }
    return out;
}

Complex collective_spin_sq_trace(const Eigen::MatrixXcd &rho, int n_qubits, PauliAxis a) {
    const bool f = flips(a);
    const auto dim = static_cast<std::size_t>(rho.rows());
    return chunked_sum(dim, [&](std::size_t c) {
        // (J J rho)[c, c] using only the column c entries it touches.
        Complex outer = 0.0;
        for (int s = 0; s < n_qubits; ++s) {
            const std::size_t ms = site_mask(n_qubits, s);
            const std::size_t z = c ^ (f ? ms : 0);
            Complex inner = 0.0;
            for (int t = 0; t < n_qubits; ++t) {
                const std::size_t mt = site_mask(n_qubits, t);
                const std::size_t w = z ^ (f ? mt : 0);
                inner += pauli_phase(a, (w & mt) != 0) *
                         rho(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(c));
            }
            outer += pauli_phase(a, (z & ms) != 0) * 0.5 * inner;
        }
        return 0.5 * outer;
    });
}

Eigen::MatrixXcd pair_operator(int n_qubits, std::span<const PairTerm> terms) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    // Column x only receives contributions from x itself.
#pragma omp parallel for schedule(static)
    for (Index x = 0; x < static_cast<Index>(dim); ++x) {
        const auto ux = static_cast<std::size_t>(x);
        for (const auto &t : terms) {
            const std::size_t mi = site_mask(n_qubits, t.site_i);
            const std::size_t mj = site_mask(n_qubits, t.site_j);
            const std::size_t flip = (flips(t.axis_i) ? mi : 0) | (flips(t.axis_j) ? mj : 0);
            op(static_cast<Eigen::Index>(ux ^ flip), static_cast<Eigen::Index>(x)) +=
                t.coeff * pauli_phase(t.axis_i, (ux & mi) != 0) *
                pauli_phase(t.axis_j, (ux & mj) != 0);
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
    const auto half = static_cast<Index>(psi.size() / 2);
    for (int s = 0; s < n_qubits; ++s) {
        const std::size_t m = site_mask(n_qubits, s);
#pragma omp parallel for schedule(static)
        for (Index i = 0; i < half; ++i) {
            const std::size_t x = insert_zero(static_cast<std::size_t>(i), m);
            const Complex a0 = psi[x];
            const Complex a1 = psi[x | m];
            psi[x] = h * a0 + g01 * a1;
            psi[x | m] = h * a0 + g11 * a1;
        }
    }
}

void apply_depolarizing(Eigen::MatrixXcd &rho, int n_qubits, int site, double q) {
    // sum_k K rho K^dagger on each 2x2 block of the site, written out:
    //   (1 - 3q/4) B + q/4 (X B X + Y B Y + Z B Z)
    const std::size_t m = site_mask(n_qubits, site);
    const double keep = 1.0 - 0.75 * q;
    const double flip = 0.25 * q;
    const auto half = static_cast<Index>(rho.rows() / 2);
#pragma omp parallel for schedule(static)
    for (Index i = 0; i < half; ++i) {
        const auto r0 = static_cast<Eigen::Index>(insert_zero(static_cast<std::size_t>(i), m));
        const auto r1 = static_cast<Eigen::Index>(static_cast<std::size_t>(r0) | m);
        for (Index j = 0; j < half; ++j) {
            const auto c0 =
                static_cast<Eigen::Index>(insert_zero(static_cast<std::size_t>(j), m));
            const auto c1 = static_cast<Eigen::Index>(static_cast<std::size_t>(c0) | m);
            const Complex b00 = rho(r0, c0);
            const Complex b01 = rho(r0, c1);
            const Complex b10 = rho(r1, c0);
            const Complex b11 = rho(r1, c1);
            // X B X + Y B Y + Z B Z = [[2 b11 + b00, -b01], [-b10, 2 b00 + b11]]
            rho(r0, c0) = keep * b00 + flip * (2.0 * b11 + b00);
            rho(r1, c1) = keep * b11 + flip * (2.0 * b00 + b11);
            rho(r0, c1) = keep * b01 + flip * -b01;
            rho(r1, c0) = keep * b10 + flip * -b10;
        }
    }
}

Eigen::MatrixXcd contract_operator(const Eigen::MatrixXcd &op,
                                   std::span<const std::size_t> part_offsets,
                                   std::span<const std::size_t> rest_offsets,
                                   std::span<const Complex> rest_state) {
    const auto dp = static_cast<Index>(part_offsets.size());
    const auto dr = rest_offsets.size();
    Eigen::MatrixXcd h(dp, dp);
#pragma omp parallel for collapse(2) schedule(static)
    for (Index y = 0; y < dp; ++y) {
        for (Index x = 0; x < dp; ++x) {
            const std::size_t py = part_offsets[static_cast<std::size_t>(y)];
            const std::size_t px = part_offsets[static_cast<std::size_t>(x)];
            Complex acc = 0.0;
            for (std::size_t u = 0; u < dr; ++u) {
                const auto row = static_cast<Eigen::Index>(py | rest_offsets[u]);
                Complex row_acc = 0.0;
                for (std::size_t v = 0; v < dr; ++v) {
                    row_acc +=
                        op(row, static_cast<Eigen::Index>(px | rest_offsets[v])) * rest_state[v];
                }
                acc += std::conj(rest_state[u]) * row_acc;
            }
            h(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = acc;
        }
    }
    return h;
}

}  // namespace sfw::kernels
