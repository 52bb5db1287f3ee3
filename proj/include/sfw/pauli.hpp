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

#include <array>
#include <string_view>

namespace sfw {

enum class PauliAxis { x, y, z };

inline constexpr std::array<PauliAxis, 3> kPauliAxes{PauliAxis::x, PauliAxis::y, PauliAxis::z};

constexpr std::size_t axis_index(PauliAxis a) { return static_cast<std::size_t>(a); }

constexpr char axis_name(PauliAxis a) {
    switch (a) {
    case PauliAxis::x:
        return 'x';
    case PauliAxis::y:
        return 'y';
    case PauliAxis::z:
        break;
    }
    return 'z';
}

/// Parses "x", "y" or "z". Throws InputError otherwise.
PauliAxis parse_axis(std::string_view name);

}  // namespace sfw
