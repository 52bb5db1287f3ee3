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

// Dense reference constructions built from explicit Kronecker products. They
// share no code with the library kernels.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sfw/bisep.hpp"
#include "sfw/qstate.hpp"
#include "sfw/witness.hpp"

namespace sfw::oracle {

inline Eigen::Matrix2cd pauli(PauliAxis a) {
    Eigen::Matrix2cd m;
    if (a == PauliAxis::x) {
        m << 0, 1, 1, 0;
    } else if (a == PauliAxis::y) {
        m << 0, Complex(0, -1), Complex(0, 1), 0;
    } else {
        m << 1, 0, 0, -1;
    }
    return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

/// sigma^a on site i times sigma^b on site j; site 0 is the leftmost factor.
inline Eigen::MatrixXcd pair_pauli(int n, int i, int j, PauliAxis a, PauliAxis b) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int s = 0; s < n; ++s) {
        Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(2, 2);
        if (s == i) {
            f = pauli(a);
        } else if (s == j) {
            f = pauli(b);
        }
        m = kron(m, f);
    }
    return m;
}

inline Eigen::MatrixXcd single_pauli(int n, int i, PauliAxis a) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int s = 0; s < n; ++s) {
        m = kron(m, s == i ? Eigen::MatrixXcd(pauli(a)) : Eigen::MatrixXcd::Identity(2, 2));
    }
    return m;
}

inline Eigen::MatrixXcd dense_sigma(const WitnessSpec &spec) {
    const int n = spec.n_qubits();
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(dim, dim);
    const double pairs = n * (n - 1) / 2.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double m = spec.layout().positions()[static_cast<std::size_t>(j)] -
                             spec.layout().positions()[static_cast<std::size_t>(i)];
            const double w = std::cos(spec.k().value() * m) / pairs;
            for (PauliAxis a : kPauliAxes) {
                sigma += w * spec.coefficients()[a] * pair_pauli(n, i, j, a, a);
            }
        }
    }
    return sigma;
}

inline Eigen::VectorXcd vec(const StateVector &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = s[i];
    }
    return v;
}

inline double expectation(const StateVector &s, const Eigen::MatrixXcd &op) {
    const Eigen::VectorXcd v = vec(s);
    return v.dot(op * v).real();
}

/// Sign of the permutation taking 1^l 0^(n-l) to `bits`, counted as adjacent swaps.
inline int transposition_sign(std::string bits) {
    const int l = static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
    std::string ref(static_cast<std::size_t>(l), '1');
    ref.append(bits.size() - static_cast<std::size_t>(l), '0');
    int swaps = 0;
    // Bubble the reference into the target one adjacent transposition at a time.
    for (std::size_t p = 0; p < bits.size(); ++p) {
        if (ref[p] == bits[p]) {
            continue;
        }
        std::size_t q = p + 1;
        while (ref[q] != bits[p]) {
            ++q;
        }
        for (; q > p; --q) {
            std::swap(ref[q], ref[q - 1]);
            ++swaps;
        }
    }
    return swaps % 2 == 0 ? 1 : -1;
}

inline StateVector random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
    }
    return StateVector::normalized(n, std::move(amps));
}

inline BlochVector random_bloch(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double x = g(rng), y = g(rng), z = g(rng);
    const double r = std::cbrt(u(rng)) / std::sqrt(x * x + y * y + z * z);
    return {x * r, y * r, z * r};
}

inline Eigen::Vector2cd bloch_ket(double theta, double phi) {
    return {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
}

/// Maximum of <Sigma> over product states on `lone` (x) rest, where the lone
/// qubit runs over a (theta, phi) grid and the rest is optimized exactly.
inline double grid_cut_max(const WitnessSpec &spec, int lone, int steps = 180) {
    const int n = spec.n_qubits();
    const Eigen::MatrixXcd sigma = dense_sigma(spec);
    const Eigen::Index rest_dim = Eigen::Index{1} << (n - 1);
    double best = -1e300;
    for (int t = 0; t <= steps; ++t) {
        const double theta = std::numbers::pi * t / steps;
        for (int p = 0; p < 2 * steps; ++p) {
            const Eigen::Vector2cd a = bloch_ket(theta, std::numbers::pi * p / steps);
            // <a| Sigma |a> on the remaining sites, by explicit index bookkeeping.
            Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(rest_dim, rest_dim);
            auto full = [&](Eigen::Index r, int bit) {
                Eigen::Index out = 0;
                int rb = n - 2;
                for (int s = 0; s < n; ++s) {
                    const int b = s == lone ? bit : static_cast<int>((r >> rb--) & 1);
                    out = (out << 1) | b;
                }
                return out;
            };
            for (Eigen::Index r = 0; r < rest_dim; ++r) {
                for (Eigen::Index c = 0; c < rest_dim; ++c) {
                    Complex acc = 0.0;
                    for (int u = 0; u < 2; ++u) {
                        for (int v = 0; v < 2; ++v) {
                            acc += std::conj(a(u)) * sigma(full(r, u), full(c, v)) * a(v);
                        }
                    }
                    h(r, c) = acc;
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
            best = std::max(best, es.eigenvalues()(rest_dim - 1));
        }
    }
    return best;
}

}  // namespace sfw::oracle
