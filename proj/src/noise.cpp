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

#include "sfw/noise.hpp"

#include <cmath>
#include <string>

#include "sfw/errors.hpp"
#include "sfw/kernels.hpp"

namespace sfw {

void NoiseModel::validate() const {
    if (!(strength >= 0.0 && strength <= 1.0)) {
        throw InputError("noise strength must lie in [0, 1]");
    }
}

double noisy_sigma(const StateVector &state, const WitnessSpec &spec, const NoiseModel &noise) {
    noise.validate();
    const double sigma = sigma_value(state, spec);
    const double keep = 1.0 - noise.strength;
    // Sigma is traceless, so the admixed identity contributes nothing.
    return noise.kind == NoiseKind::collective ? keep * sigma : keep * keep * sigma;
}

double collective_threshold(const StateVector &state, const WitnessSpec &spec) {
    const double sigma = sigma_value(state, spec);
    return sigma > 1.0 ? 1.0 - 1.0 / sigma : 0.0;
}

Rational collective_threshold(const Rational &sigma) {
    return sigma > 1 ? Rational(1) - Rational(1) / sigma : Rational(0);
}

double individual_threshold_from_sigma(double sigma) {
    return sigma > 1.0 ? 1.0 - 1.0 / std::sqrt(sigma) : 0.0;
}

double individual_threshold(const StateVector &state, const WitnessSpec &spec) {
    return individual_threshold_from_sigma(sigma_value(state, spec));
}

ChannelSides kraus_crosscheck(const StateVector &state, const WitnessSpec &spec, double q,
                              int site_cap) {
    NoiseModel{NoiseKind::individual, q}.validate();
    const int n = state.n_qubits();
    if (n > site_cap || n > kMaxDenseQubits) {
        throw ResourceError("Kraus cross-check is limited to " + std::to_string(site_cap) +
                            " qubits");
    }
    const double observable = noisy_sigma(state, spec, {NoiseKind::individual, q});
    Eigen::MatrixXcd rho = DensityMatrix::pure(state).entries();
    for (int site = 0; site < n; ++site) {
        kernels::apply_depolarizing(rho, n, site, q);
    }
    const double state_side = sigma_value(DensityMatrix::assume_valid(n, std::move(rho)), spec);
    return {observable, state_side};
}

}  // namespace sfw
