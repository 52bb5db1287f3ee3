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

#include "sfw/serialize.hpp"

#include <cmath>
#include <fstream>

#include "sfw/errors.hpp"

namespace sfw {

using nlohmann::json;

namespace {

json sites_to_json(const std::vector<int> &sites) {
    json out = json::array();
    for (int s : sites) {
        out.push_back(s + 1);
    }
    return out;
}

json parse_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace

json state_to_json(const StateVector &state) {
    json terms = json::array();
    for (std::size_t x = 0; x < state.dim(); ++x) {
        const Complex a = state[x];
        if (std::abs(a) > kTermCutoff) {
            terms.push_back(
                {{"basis", basis_bits(x, state.n_qubits())}, {"re", a.real()}, {"im", a.imag()}});
        }
    }
    return {{"n_qubits", state.n_qubits()}, {"terms", std::move(terms)}};
}

StateVector state_from_json(const json &j) {
    try {
        const int n = j.at("n_qubits").get<int>();
        if (n < 1 || n > max_qubits()) {
            throw InputError("n_qubits out of range in serialized state");
        }
        std::vector<Complex> amps(std::size_t{1} << n);
        for (const auto &t : j.at("terms")) {
            const auto bits = t.at("basis").get<std::string>();
            if (bits.size() != static_cast<std::size_t>(n)) {
                throw InputError("basis string '" + bits + "' has the wrong length");
            }
            const double im = t.contains("im") ? t.at("im").get<double>() : 0.0;
            amps[basis_index(bits)] += Complex(t.at("re").get<double>(), im);
        }
        double norm2 = 0.0;
        for (const auto &a : amps) {
            norm2 += std::norm(a);
        }
        if (std::abs(std::sqrt(norm2) - 1.0) >= kNormSlack) {
            throw InputError("serialized state norm deviates from 1 by more than 1e-9");
        }
        return StateVector::normalized(n, std::move(amps));
    } catch (const json::exception &e) {
        throw InputError(std::string("malformed state JSON: ") + e.what());
    }
}

json spec_to_json(const WitnessSpec &spec) {
    const auto &c = spec.coefficients();
    json k = spec.k().is_pi_multiple() ? json(spec.k().to_string()) : json(spec.k().value());
    return {{"n_qubits", spec.n_qubits()},
            {"k", std::move(k)},
            {"c", {c.x, c.y, c.z}},
            {"positions", spec.layout().positions()}};
}

WitnessSpec spec_from_json(const json &j) {
    try {
        const int n = j.at("n_qubits").get<int>();
        const auto &kj = j.at("k");
        const Angle k = kj.is_string() ? Angle::parse(kj.get<std::string>())
                                       : Angle::radians(kj.get<double>());
        const auto c = j.at("c").get<std::vector<double>>();
        if (c.size() != 3) {
            throw InputError("witness spec needs exactly three coefficients");
        }
        const Coefficients coeffs{c[0], c[1], c[2]};
        if (j.contains("positions")) {
            return WitnessSpec(n, k, coeffs,
                               SiteLayout(j.at("positions").get<std::vector<double>>()));
        }
        return WitnessSpec(n, k, coeffs);
    } catch (const json::exception &e) {
        throw InputError(std::string("malformed witness spec JSON: ") + e.what());
    }
}

json bisep_to_json(const BisepResult &result) {
    json states = json::array();
    for (const auto &s : result.best_state) {
        states.push_back(state_to_json(s));
    }
    return {{"bound", result.bound},
            {"best_cut",
             {{"part_a", sites_to_json(result.best_cut.part_a)},
              {"part_b", sites_to_json(result.best_cut.part_b)},
              {"label", result.best_cut.to_string()}}},
            {"best_state", std::move(states)},
            {"restarts_used", result.restarts_used},
            {"converged", result.converged},
            {"iterations", result.iterations},
            {"spec", spec_to_json(result.spec)}};
}

StateVector read_state_file(const std::string &path) { return state_from_json(parse_file(path)); }

WitnessSpec read_spec_file(const std::string &path) { return spec_from_json(parse_file(path)); }

}  // namespace sfw
