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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace sfw {

using Complex = std::complex<double>;

/// Default cap on the register size for dense 2^N state vectors.
inline constexpr int kDefaultMaxQubits = 16;
/// Cap for dense 2^N x 2^N density matrices and operators.
inline constexpr int kMaxDenseQubits = 12;

/// Current state-vector qubit cap (process wide, starts at kDefaultMaxQubits).
int max_qubits();
void set_max_qubits(int cap);

/// Basis-index convention: qubit i (1-based, leftmost in ket notation) is bit
/// (N - i) of the index, so |q1 q2 ... qN> reads as the binary number q1q2...qN.
/// Internally sites are 0-based: site s lives at bit (N - 1 - s).
constexpr std::size_t site_mask(int n_qubits, int site) {
    return std::size_t{1} << (n_qubits - 1 - site);
}

/// Index of a ket bit string such as "0110". Throws InputError on bad characters.
std::size_t basis_index(std::string_view bits);
/// Inverse of basis_index for a register of n_qubits.
std::string basis_bits(std::size_t index, int n_qubits);

/// Normalized pure state over 2^N amplitudes.
class StateVector {
  public:
    /// Validates length and unit norm (1e-12).
    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    static StateVector normalized(int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t index) const { return amplitudes_[index]; }

  private:
    struct Trusted {};
    StateVector(Trusted, int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite 2^N x 2^N matrix.
class DensityMatrix {
  public:
    /// Validates Hermiticity (1e-12), trace (1e-12) and minimum eigenvalue (>= -1e-10).
    DensityMatrix(int n_qubits, Eigen::MatrixXcd entries);

    static DensityMatrix pure(const StateVector &state);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
    const Eigen::MatrixXcd &entries() const { return entries_; }

    /// For matrices built by channels that preserve the invariants.
    static DensityMatrix assume_valid(int n_qubits, Eigen::MatrixXcd entries);

  private:
    struct Trusted {};
    DensityMatrix(Trusted, int n_qubits, Eigen::MatrixXcd entries);

    int n_qubits_;
    Eigen::MatrixXcd entries_;
};

/// Single-qubit Bloch vector; |n| <= 1.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    /// Throws InputError when |n| > 1 + 1e-12.
    void validate() const;
    /// 1/2 (I + n . sigma)
    Eigen::Matrix2cd density() const;
};

enum class BranchSign { plus, minus };

StateVector make_basis_state(int n_qubits, std::string_view bits);

/// |N,l>: equal weight on all Hamming-weight-l basis states.
StateVector make_dicke(int n_qubits, int l);

/// |N,l^ph>: Dicke amplitudes with sign (-1)^P(x), P the parity of adjacent
/// transpositions taking 1^l 0^(N-l) to x. Computed as (-1)^(s(x) - s(ref)) with
/// s the sum of the 0-based ket positions of the 1s.
StateVector make_phased_dicke(int n_qubits, int l);

/// Sign of basis state `index` in make_phased_dicke (weight-l index assumed).
int phased_dicke_sign(std::size_t index, int n_qubits, int l);

/// cos(t)/2 (|0011> + |1100>) +/- sin(t)/2 (|0000> + |1111>).
StateVector make_ghz_superposition(double theta, BranchSign sign);

/// cos(t)|4,2> +/- sin(t)/sqrt(2) (|0000> + |1111>).
StateVector make_dicke_ghz_superposition(double theta, BranchSign sign);

DensityMatrix make_product_density(std::span<const BlochVector> blochs);

/// p I/2^N + (1-p)|psi><psi|
DensityMatrix mix_with_white_noise(const StateVector &state, double p);

/// Tensor product of states on disjoint, sorted site groups that together
/// cover 0..n_qubits-1. Each factor is in ket order over its own sites.
StateVector assemble_product(int n_qubits, std::span<const std::vector<int>> site_groups,
                             std::span<const StateVector> factors);

/// Number of set bits of a basis index restricted to the register.
int hamming_weight(std::size_t index);

/// Binomial coefficient B(n, k) as an integer.
std::int64_t binomial(int n, int k);

}  // namespace sfw
