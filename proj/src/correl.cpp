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

#include "sfw/correl.hpp"

#include <cmath>
#include <string>

#include "sfw/errors.hpp"
#include "sfw/kernels.hpp"

namespace sfw {

namespace {

constexpr double kImagResidue = 1e-10;

void check_pair(int n_qubits, int site_i, int site_j) {
    if (site_i < 0 || site_j >= n_qubits || site_i >= site_j) {
        throw InputError("site pair (" + std::to_string(site_i) + ", " + std::to_string(site_j) +
                         ") must satisfy 0 <= i < j < " + std::to_string(n_qubits));
    }
}

double real_part(Complex v, const char *what) {
    if (std::abs(v.imag()) > kImagResidue) {
        throw CheckFailure(std::string(what) + " has imaginary residue " +
                           std::to_string(v.imag()));
    }
    return v.real();
}

template <class State>
Complex structure_factor_impl(const State &state, Angle k, PauliAxis a, PauliAxis b,
                              const SiteLayout &layout) {
    const int n = state.n_qubits();
    if (layout.size() != n) {
        throw InputError("layout has " + std::to_string(layout.size()) + " sites, state has " +
                         std::to_string(n));
    }
    Complex sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double m = layout.separation(i, j);
            const Complex phase{k.cos_of_multiple(m), k.sin_of_multiple(m)};
            sum += phase * two_point(state, i, j, a, b);
        }
    }
    return sum;
}

template <class State> IdentitySides identity_impl(const State &state, PauliAxis a) {
    const int n = state.n_qubits();
    const double pair_sum =
        structure_factor_impl(state, Angle{}, a, a, SiteLayout::uniform(n)).real();
    return {pair_sum, (4.0 * collective_spin_sq(state, a) - n) / 2.0};
}

template <class State> std::vector<CorrelatorRow> table_impl(const State &state) {
    std::vector<CorrelatorRow> rows;
    const int n = state.n_qubits();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (PauliAxis a : kPauliAxes) {
                for (PauliAxis b : kPauliAxes) {
                    rows.push_back({i, j, a, b, two_point(state, i, j, a, b)});
                }
            }
        }
    }
    return rows;
}

}  // namespace

SiteLayout SiteLayout::uniform(int n_sites) {
    if (n_sites < 1) {
        throw InputError("layout needs at least one site");
    }
    std::vector<double> r(static_cast<std::size_t>(n_sites));
    for (int i = 0; i < n_sites; ++i) {
        r[static_cast<std::size_t>(i)] = i;
    }
    return SiteLayout(std::move(r));
}

SiteLayout::SiteLayout(std::vector<double> positions) : positions_(std::move(positions)) {
    if (positions_.empty()) {
        throw InputError("layout needs at least one site");
    }
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (!std::isfinite(positions_[i])) {
            throw InputError("site positions must be finite");
        }
        if (i > 0 && !(positions_[i] > positions_[i - 1])) {
            throw InputError("site positions must be strictly increasing");
        }
    }
}

double SiteLayout::separation(int site_i, int site_j) const {
    return positions_[static_cast<std::size_t>(site_j)] -
           positions_[static_cast<std::size_t>(site_i)];
}

double two_point(const StateVector &state, int site_i, int site_j, PauliAxis a, PauliAxis b) {
    check_pair(state.n_qubits(), site_i, site_j);
    return real_part(kernels::pauli_pair_expectation(state.amplitudes(), state.n_qubits(),
                                                     site_i, site_j, a, b),
                     "two-point correlator");
}

double two_point(const DensityMatrix &state, int site_i, int site_j, PauliAxis a, PauliAxis b) {
    check_pair(state.n_qubits(), site_i, site_j);
    return real_part(
        kernels::pauli_pair_trace(state.entries(), state.n_qubits(), site_i, site_j, a, b),
        "two-point correlator");
}

double collective_spin_sq(const StateVector &state, PauliAxis a) {
    const auto applied =
        kernels::apply_collective_spin(state.amplitudes(), state.n_qubits(), a);
    double s = 0.0;
    for (const auto &v : applied) {
        s += std::norm(v);
    }
    return s;
}

double collective_spin_sq(const DensityMatrix &state, PauliAxis a) {
    return real_part(kernels::collective_spin_sq_trace(state.entries(), state.n_qubits(), a),
                     "<J^2>");
}

Complex structure_factor(const StateVector &state, Angle k, PauliAxis a, PauliAxis b,
                         const SiteLayout &layout) {
    return structure_factor_impl(state, k, a, b, layout);
}

Complex structure_factor(const DensityMatrix &state, Angle k, PauliAxis a, PauliAxis b,
                         const SiteLayout &layout) {
    return structure_factor_impl(state, k, a, b, layout);
}

IdentitySides verify_collective_identity(const StateVector &state, PauliAxis a) {
    return identity_impl(state, a);
}

IdentitySides verify_collective_identity(const DensityMatrix &state, PauliAxis a) {
    return identity_impl(state, a);
}

std::vector<CorrelatorRow> correlator_table(const StateVector &state) { return table_impl(state); }

std::vector<CorrelatorRow> correlator_table(const DensityMatrix &state) {
    return table_impl(state);
}

}  // namespace sfw
