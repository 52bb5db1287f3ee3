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
#include <optional>
#include <string>
#include <string_view>

namespace sfw {

/// A real angle (or wave number) that remembers when it is an exact rational
/// multiple of pi. Phase factors cos(k m) and sin(k m) for integer m are then
/// evaluated by reducing p*m/q modulo 2, so k = pi gives exactly +/-1 and
/// k = pi/2 gives exactly 0 where expected.
class Angle {
  public:
    constexpr Angle() = default;

    static Angle radians(double value);
    /// (num/den) * pi. den must be positive.
    static Angle pi_times(std::int64_t num, std::int64_t den = 1);

    /// Accepts plain reals ("0.25", "-1e-3") and pi multiples such as "pi",
    /// "-pi", "pi/4", "3pi/4", "3*pi/4", "2pi".
    static Angle parse(std::string_view token);

    double value() const { return radians_; }
    bool is_pi_multiple() const { return den_ != 0; }
    std::int64_t pi_numerator() const { return num_; }
    std::int64_t pi_denominator() const { return den_; }

    /// cos(value * m)
    double cos_of_multiple(double m) const;
    /// sin(value * m)
    double sin_of_multiple(double m) const;

    Angle operator-() const;

    /// "pi/4"-style token for pi multiples, otherwise the shortest round-trip decimal.
    std::string to_string() const;

  private:
    // Reduced p*m mod 2q when the fast exact path applies.
    std::optional<std::int64_t> reduced_multiple(double m) const;

    double radians_ = 0.0;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace sfw
