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

#include "sfw/witness.hpp"

#include <cmath>
#include <string>

#include "sfw/errors.hpp"
#include "sfw/kernels.hpp"

namespace sfw {

namespace {

void check_coefficient(double c) {
    if (!std::isfinite(c) || std::abs(c) > 1.0) {
        throw InputError("witness coefficients must lie in [-1, 1]");
    }
}

template <class State> void check_dimension(const State &state, const WitnessSpec &spec) {
    if (state.n_qubits() != spec.n_qubits()) {
        throw InputError("state has " + std::to_string(state.n_qubits()) +
                         " qubits, witness expects " + std::to_string(spec.n_qubits()));
    }
}

template <class State> double sigma_impl(const State &state, const WitnessSpec &spec) {
    check_dimension(state, spec);
    const int n = spec.n_qubits();
    const auto &c = spec.coefficients();
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double w = spec.pair_weight(i, j);
            if (w == 0.0) {
                continue;
            }
            double pair = 0.0;
            for (PauliAxis a : kPauliAxes) {
                if (c[a] != 0.0) {
                    pair += c[a] * two_point(state, i, j, a, a);
                }
            }
            sum += w * pair;
        }
    }
    return sum;
}

template <class State>
std::vector<ScanRecord> scan_impl(const State &state, const Coefficients &c,
                                  std::span<const Angle> k_grid,
                                  const std::optional<SiteLayout> &layout) {
    if (k_grid.empty()) {
        throw InputError("k grid must not be empty");
    }
    const int n = state.n_qubits();
    const SiteLayout sites = layout ? *layout : SiteLayout::uniform(n);
    std::vector<ScanRecord> out;
    out.reserve(k_grid.size());
    for (const Angle &k : k_grid) {
        const WitnessSpec spec(n, k, c, sites);
        const double s = sigma_value(state, spec);
        out.push_back({k, s, 1.0 - s});
    }
    return out;
}

}  // namespace

WitnessSpec::WitnessSpec(int n_qubits, Angle k, Coefficients c)
    : WitnessSpec(n_qubits, k, c, SiteLayout::uniform(std::max(n_qubits, 1))) {}

WitnessSpec::WitnessSpec(int n_qubits, Angle k, Coefficients c, SiteLayout layout)
    : n_qubits_(n_qubits), k_(k), c_(c), layout_(std::move(layout)) {
    if (n_qubits < 2) {
        throw InputError("a witness needs at least two qubits");
    }
    if (layout_.size() != n_qubits) {
        throw InputError("layout length does not match n_qubits");
    }
    check_coefficient(c.x);
    check_coefficient(c.y);
    check_coefficient(c.z);
}

WitnessSpec WitnessSpec::with_k(Angle k) const { return WitnessSpec(n_qubits_, k, c_, layout_); }

double WitnessSpec::pair_weight(int site_i, int site_j) const {
    return k_.cos_of_multiple(layout_.separation(site_i, site_j)) /
           static_cast<double>(binomial(n_qubits_, 2));
}

double sigma_value(const StateVector &state, const WitnessSpec &spec) {
    return sigma_impl(state, spec);
}

double sigma_value(const DensityMatrix &state, const WitnessSpec &spec) {
    return sigma_impl(state, spec);
}

double witness_value(const StateVector &state, const WitnessSpec &spec) {
    return 1.0 - sigma_value(state, spec);
}

double witness_value(const DensityMatrix &state, const WitnessSpec &spec) {
    return 1.0 - sigma_value(state, spec);
}

bool detects(const StateVector &state, const WitnessSpec &spec, double tol) {
    return witness_value(state, spec) < -tol;
}

bool detects(const DensityMatrix &state, const WitnessSpec &spec, double tol) {
    return witness_value(state, spec) < -tol;
}

Rational dicke_sigma_closed_form(int n_qubits, int l) {
    if (n_qubits < 2) {
        throw InputError("closed form needs N >= 2");
    }
    if (l < 0 || l > n_qubits) {
        throw InputError("excitation number outside [0, N]");
    }
    const std::int64_t n = n_qubits;
    const std::int64_t d = n - 2 * l;
    return Rational(4 * l * (n - l) - d * d + n, n * (n - 1));
}

Rational phased_dicke_sigma_closed_form(int n_qubits, int l, bool with_z) {
    if (with_z) {
        if (n_qubits == 4 && l == 2) {
            return Rational(13, 9);
        }
        if (n_qubits == 6 && l == 3) {
            return Rational(31, 25);
        }
        throw UnsupportedCaseError("phased Dicke closed form with c_z = 1 is only known for "
                                   "(4,2) and (6,3)");
    }
    const bool half_filled = n_qubits >= 2 && n_qubits % 2 == 0 && 2 * l == n_qubits;
    const bool near_half = n_qubits >= 3 && n_qubits % 2 == 1 &&
                           (2 * l == n_qubits - 1 || 2 * l == n_qubits + 1);
    if (!half_filled && !near_half) {
        throw UnsupportedCaseError("phased Dicke closed form needs l = N/2 (even N) or "
                                   "l = (N +/- 1)/2 (odd N)");
    }
    const std::int64_t n = n_qubits;
    return Rational(2 * l * (n - l), binomial(n_qubits, 2));
}

Eigen::MatrixXcd sigma_operator(const WitnessSpec &spec) {
    const int n = spec.n_qubits();
    if (n > kMaxDenseQubits) {
        throw ResourceError("dense Sigma operator is limited to " +
                            std::to_string(kMaxDenseQubits) + " qubits");
    }
    std::vector<kernels::PairTerm> terms;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double w = spec.pair_weight(i, j);
            for (PauliAxis a : kPauliAxes) {
                const double coeff = w * spec.coefficients()[a];
                if (coeff != 0.0) {
                    terms.push_back({i, j, a, a, coeff});
                }
            }
        }
    }
    return kernels::pair_operator(n, terms);
}

std::vector<ScanRecord> scan_k(const StateVector &state, const Coefficients &c,
                               std::span<const Angle> k_grid,
                               const std::optional<SiteLayout> &layout) {
    return scan_impl(state, c, k_grid, layout);
}

std::vector<ScanRecord> scan_k(const DensityMatrix &state, const Coefficients &c,
                               std::span<const Angle> k_grid,
                               const std::optional<SiteLayout> &layout) {
    return scan_impl(state, c, k_grid, layout);
}

}  // namespace sfw
