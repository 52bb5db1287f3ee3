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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sfw/qstate.hpp"
#include "sfw/witness.hpp"

namespace sfw::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 2,
    kExitResource = 3,
    kExitUnsupported = 4,
    kExitCheckFailure = 5,
};

enum class Command { eval, scan, robustness, bisep_bound, sample, correlators, reproduce_paper };
enum class Format { text, json, csv };

/// Environment variable consulted for the default --seed.
inline constexpr const char *kSeedEnv = "SFW_SEED";

struct RunConfig {
    Command command = Command::eval;
    std::string state_token;              // builtin catalog entry, e.g. "dicke:4,2"
    std::optional<std::string> state_file;
    std::optional<std::string> spec_file;
    std::string k = "0";
    std::optional<std::string> c;         // "cx,cy,cz"
    std::optional<std::string> positions; // "r1,r2,..."
    std::optional<int> n_qubits;          // bisep-bound without a state
    std::optional<std::string> output_path;
    Format format = Format::text;
    std::uint64_t seed = 0;

    std::vector<std::string> k_grid;  // scan
    std::optional<std::string> k_linspace;
    std::vector<std::int64_t> shots_grid{1000}; // sample
    int restarts = 200;                         // bisep-bound, reproduce-paper
    double tol = 1e-10;
    int max_iter = 500;
    std::optional<std::string> cut; // bisep-bound: 1-based sites of part a
    bool with_product = false;
};

using AnyState = std::variant<StateVector, DensityMatrix>;

/// Builtin catalog: dicke:N,l  phased-dicke:N,l  ghz-superposition:THETA,+|-
/// dicke-ghz-superposition:THETA,+|-  basis:BITS  product:x,y,z;x,y,z;...
AnyState build_state(std::string_view token);

/// Parses "a,b,c" into reals.
std::vector<double> parse_reals(std::string_view list);

/// Executes a parsed configuration, writing the artifact to `out`.
int execute(const RunConfig &config, std::ostream &out);

/// Full entry point: parses argv-style arguments (args[0] is the program
/// name), runs the command and maps errors to exit codes.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace sfw::cli
