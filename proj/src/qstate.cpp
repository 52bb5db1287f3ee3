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

#include "sfw/qstate.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>

#include "sfw/errors.hpp"

namespace sfw {

namespace {

std::atomic<int> g_max_qubits{kDefaultMaxQubits};

void check_register(int n_qubits) {
    if (n_qubits < 1) {
        throw InputError("n_qubits must be positive, got " + std::to_string(n_qubits));
    }
    if (n_qubits > max_qubits()) {
        throw ResourceError("n_qubits = " + std::to_string(n_qubits) + " exceeds the cap of " +
                            std::to_string(max_qubits()));
    }
}

void check_dense(int n_qubits) {
    check_register(n_qubits);
    if (n_qubits > kMaxDenseQubits) {
        throw ResourceError("dense matrices are limited to " + std::to_string(kMaxDenseQubits) +
                            " qubits");
    }
}

void check_excitations(int n_qubits, int l) {
    if (l < 0 || l > n_qubits) {
        throw InputError("excitation number " + std::to_string(l) + " outside [0, " +
                         std::to_string(n_qubits) + "]");
    }
}

double squared_norm(std::span<const Complex> amps) {
    double s = 0.0;
    for (const auto &a : amps) {
        s += std::norm(a);
    }
    return s;
}

}  // namespace

int max_qubits() { return g_max_qubits.load(); }

void set_max_qubits(int cap) {
    if (cap < 1 || cap > 30) {
        throw InputError("qubit cap must lie in [1, 30]");
    }
    g_max_qubits.store(cap);
}

std::size_t basis_index(std::string_view bits) {
    if (bits.size() > 62) {
        throw InputError("bit string too long");
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InputError("bit string '" + std::string(bits) + "' must contain only 0 and 1");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    return index;
}

std::string basis_bits(std::size_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int site = 0; site < n_qubits; ++site) {
        if (index & site_mask(n_qubits, site)) {
            s[static_cast<std::size_t>(site)] = '1';
        }
    }
    return s;
}

int hamming_weight(std::size_t index) { return std::popcount(index); }

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::int64_t b = 1;
    for (int i = 1; i <= k; ++i) {
        b = b * (n - k + i) / i;
    }
    return b;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(Trusted, int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    check_register(n_qubits);
    if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
        throw InputError("state of " + std::to_string(n_qubits) + " qubits needs 2^" +
                         std::to_string(n_qubits) + " amplitudes, got " +
                         std::to_string(amplitudes_.size()));
    }
    const double norm = squared_norm(amplitudes_);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw InputError("state is not normalized (squared norm " + std::to_string(norm) + ")");
    }
}

StateVector StateVector::normalized(int n_qubits, std::vector<Complex> amplitudes) {
    check_register(n_qubits);
    if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
        throw InputError("amplitude count does not match 2^n_qubits");
    }
    const double norm = std::sqrt(squared_norm(amplitudes));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw InputError("cannot normalize a zero or non-finite vector");
    }
    for (auto &a : amplitudes) {
        a /= norm;
    }
    return StateVector(Trusted{}, n_qubits, std::move(amplitudes));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Trusted, int n_qubits, Eigen::MatrixXcd entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {}

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd entries)
    : n_qubits_(n_qubits), entries_(std::move(entries)) {
    check_dense(n_qubits);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    if (entries_.rows() != dim || entries_.cols() != dim) {
        throw InputError("density matrix must be 2^n x 2^n");
    }
    const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12) {
        throw InputError("density matrix is not Hermitian");
    }
    const Complex tr = entries_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > 1e-12) {
        throw InputError("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10) {
        throw InputError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::assume_valid(int n_qubits, Eigen::MatrixXcd entries) {
    return DensityMatrix(Trusted{}, n_qubits, std::move(entries));
}

DensityMatrix DensityMatrix::pure(const StateVector &state) {
    check_dense(state.n_qubits());
    Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(),
                                           static_cast<Eigen::Index>(state.dim()));
    return DensityMatrix(Trusted{}, state.n_qubits(), psi * psi.adjoint());
}

// ---------------------------------------------------------------------------
// BlochVector

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

void BlochVector::validate() const {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
        throw InputError("Bloch vector entries must be finite");
    }
    if (x * x + y * y + z * z > 1.0 + 1e-12) {
        throw InputError("Bloch vector norm exceeds 1");
    }
}

Eigen::Matrix2cd BlochVector::density() const {
    Eigen::Matrix2cd rho;
    rho << Complex(1.0 + z, 0.0), Complex(x, -y), Complex(x, y), Complex(1.0 - z, 0.0);
    return 0.5 * rho;
}

// ---------------------------------------------------------------------------
// constructors

StateVector make_basis_state(int n_qubits, std::string_view bits) {
    check_register(n_qubits);
    if (bits.size() != static_cast<std::size_t>(n_qubits)) {
        throw InputError("bit string length " + std::to_string(bits.size()) +
                         " does not match n_qubits = " + std::to_string(n_qubits));
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    amps[basis_index(bits)] = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

StateVector make_dicke(int n_qubits, int l) {
    check_register(n_qubits);
    check_excitations(n_qubits, l);
    const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n_qubits, l)));
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (hamming_weight(x) == l) {
            amps[x] = amp;
        }
    }
    return StateVector::normalized(n_qubits, std::move(amps));
}

int phased_dicke_sign(std::size_t index, int n_qubits, int l) {
    int position_sum = 0;
    for (int site = 0; site < n_qubits; ++site) {
        if (index & site_mask(n_qubits, site)) {
            position_sum += site;
        }
    }
    const int reference_sum = l * (l - 1) / 2;
    return ((position_sum - reference_sum) % 2 == 0) ? 1 : -1;
}

StateVector make_phased_dicke(int n_qubits, int l) {
    check_register(n_qubits);
    check_excitations(n_qubits, l);
    const double amp = 1.0 / std::sqrt(static_cast<double>(binomial(n_qubits, l)));
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    for (std::size_t x = 0; x < amps.size(); ++x) {
        if (hamming_weight(x) == l) {
            amps[x] = amp * phased_dicke_sign(x, n_qubits, l);
        }
    }
    return StateVector::normalized(n_qubits, std::move(amps));
}

StateVector make_ghz_superposition(double theta, BranchSign sign) {
    if (!std::isfinite(theta)) {
        throw InputError("theta must be finite");
    }
    const double s = sign == BranchSign::plus ? 1.0 : -1.0;
    std::vector<Complex> amps(16);
    amps[basis_index("0011")] = std::cos(theta) / 2.0;
    amps[basis_index("1100")] = std::cos(theta) / 2.0;
    amps[basis_index("0000")] = s * std::sin(theta) / 2.0;
    amps[basis_index("1111")] = s * std::sin(theta) / 2.0;
    // cos/2 and sin/2 coefficients give squared norm 1/2; rescale.
    return StateVector::normalized(4, std::move(amps));
}

StateVector make_dicke_ghz_superposition(double theta, BranchSign sign) {
    if (!std::isfinite(theta)) {
        throw InputError("theta must be finite");
    }
    const double s = sign == BranchSign::plus ? 1.0 : -1.0;
    const StateVector dicke = make_dicke(4, 2);
    std::vector<Complex> amps(16);
    for (std::size_t x = 0; x < 16; ++x) {
        amps[x] = std::cos(theta) * dicke[x];
    }
    amps[basis_index("0000")] += s * std::sin(theta) / std::numbers::sqrt2;
    amps[basis_index("1111")] += s * std::sin(theta) / std::numbers::sqrt2;
    return StateVector::normalized(4, std::move(amps));
}

DensityMatrix make_product_density(std::span<const BlochVector> blochs) {
    if (blochs.empty()) {
        throw InputError("product state needs at least one qubit");
    }
    const int n = static_cast<int>(blochs.size());
    check_dense(n);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Ones(1, 1);
    for (const auto &b : blochs) {
        b.validate();
        const Eigen::Matrix2cd q = b.density();
        Eigen::MatrixXcd next(rho.rows() * 2, rho.cols() * 2);
        for (Eigen::Index r = 0; r < rho.rows(); ++r) {
            for (Eigen::Index c = 0; c < rho.cols(); ++c) {
                next.block<2, 2>(2 * r, 2 * c) = rho(r, c) * q;
            }
        }
        rho = std::move(next);
    }
    return DensityMatrix::assume_valid(n, std::move(rho));
}

DensityMatrix mix_with_white_noise(const StateVector &state, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError("noise weight p must lie in [0, 1]");
    }
    check_dense(state.n_qubits());
    Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(),
                                           static_cast<Eigen::Index>(state.dim()));
    const auto dim = static_cast<Eigen::Index>(state.dim());
    Eigen::MatrixXcd rho = (1.0 - p) * (psi * psi.adjoint());
    rho.diagonal().array() += p / static_cast<double>(dim);
    return DensityMatrix::assume_valid(state.n_qubits(), std::move(rho));
}

StateVector assemble_product(int n_qubits, std::span<const std::vector<int>> site_groups,
                             std::span<const StateVector> factors) {
    check_register(n_qubits);
    if (site_groups.size() != factors.size()) {
        throw InputError("one factor per site group is required");
    }
    std::vector<int> owner(static_cast<std::size_t>(n_qubits), -1);
    for (std::size_t g = 0; g < site_groups.size(); ++g) {
        if (factors[g].n_qubits() != static_cast<int>(site_groups[g].size())) {
            throw InputError("factor size does not match its site group");
        }
        for (int s : site_groups[g]) {
            if (s < 0 || s >= n_qubits || owner[static_cast<std::size_t>(s)] != -1) {
                throw InputError("site groups must partition the register");
            }
            owner[static_cast<std::size_t>(s)] = static_cast<int>(g);
        }
    }
    for (int o : owner) {
        if (o < 0) {
            throw InputError("site groups must partition the register");
        }
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    for (std::size_t x = 0; x < amps.size(); ++x) {
        Complex a = 1.0;
        for (std::size_t g = 0; g < site_groups.size(); ++g) {
            std::size_t local = 0;
            for (int s : site_groups[g]) {
                local = (local << 1) | static_cast<std::size_t>((x & site_mask(n_qubits, s)) != 0);
            }
            a *= factors[g][local];
        }
        amps[x] = a;
    }
    return StateVector::normalized(n_qubits, std::move(amps));
}

}  // namespace sfw
