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
#include <string>
#include <vector>

namespace sfw::report {

struct Check {
    std::string id;     // "1", "2", ... matching the acceptance criteria
    std::string name;
    std::string detail; // computed quantities
    bool passed;
};

struct Options {
    std::uint64_t seed = 0;
    int restarts = 200;
};

/// Recomputes every published quantity with pass/fail flags. Deterministic for a given seed.
std::vector<Check> reproduce_paper(const Options &options);

}  // namespace sfw::report
