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

// JSON forms of states, witness specs and biseparable-bound results.
//
//   state:  {"n_qubits": 2, "terms": [{"basis": "01", "re": 0.7071, "im": 0.0}, ...]}
//   spec:   {"n_qubits": 4, "k": "pi" | 3.14, "c": [1, 1, -1], "positions": [0, 1, 2, 3]}
//   bisep:  {"bound": ..., "best_cut": {"part_a": [1], "part_b": [2, 3]},
//            "best_state": [<state>, <state>], "restarts_used": ..., "converged": ...,
//            "iterations": ..., "spec": <spec>}
//
// Site labels in JSON are 1-based.

#include <string>

#include "json.hpp"

#include "sfw/bisep.hpp"
#include "sfw/qstate.hpp"
#include "sfw/witness.hpp"

namespace sfw {

/// Amplitudes with modulus below this are omitted from serialized states.
inline constexpr double kTermCutoff = 1e-15;
/// Readers renormalize states whose norm is off by less than this and reject the rest.
inline constexpr double kNormSlack = 1e-9;

nlohmann::json state_to_json(const StateVector &state);
StateVector state_from_json(const nlohmann::json &j);

nlohmann::json spec_to_json(const WitnessSpec &spec);
WitnessSpec spec_from_json(const nlohmann::json &j);

nlohmann::json bisep_to_json(const BisepResult &result);

StateVector read_state_file(const std::string &path);
WitnessSpec read_spec_file(const std::string &path);

}  // namespace sfw
