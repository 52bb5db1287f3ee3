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

#include "sfw/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sfw/errors.hpp"
#include "sfw/pauli.hpp"

namespace sfw {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError("malformed angle '" + std::string(whole) + "'");
    }
    return v;
}

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

PauliAxis parse_axis(std::string_view name) {
    if (name == "x" || name == "X") {
        return PauliAxis::x;
    }
    if (name == "y" || name == "Y") {
        return PauliAxis::y;
    }
    if (name == "z" || name == "Z") {
        return PauliAxis::z;
    }
    throw InputError("unknown Pauli axis '" + std::string(name) + "'");
}

Angle Angle::radians(double value) {
    if (!std::isfinite(value)) {
        throw InputError("angle must be finite");
    }
    Angle a;
    a.radians_ = value;
    if (value == 0.0) {
        return a;
    }
    a.num_ = 0;
    a.den_ = 0;
    return a;
}

Angle Angle::pi_times(std::int64_t num, std::int64_t den) {
    if (den <= 0) {
        throw InputError("pi multiple needs a positive denominator");
    }
    const std::int64_t g = std::gcd(num, den);
    Angle a;
    a.num_ = num / g;
    a.den_ = den / g;
    a.radians_ = std::numbers::pi * static_cast<double>(a.num_) / static_cast<double>(a.den_);
    return a;
}

Angle Angle::parse(std::string_view token) {
    std::string_view t = token;
    while (!t.empty() && t.front() == ' ') {
        t.remove_prefix(1);
    }
    while (!t.empty() && t.back() == ' ') {
        t.remove_suffix(1);
    }
    if (t.empty()) {
        throw InputError("empty angle");
    }
    const auto pi_pos = t.find("pi");
    if (pi_pos == std::string_view::npos) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size()) {
            throw InputError("malformed angle '" + std::string(token) + "'");
        }
        return radians(v);
    }
    std::string_view coef = t.substr(0, pi_pos);
    std::string_view rest = t.substr(pi_pos + 2);
    if (!coef.empty() && coef.back() == '*') {
        coef.remove_suffix(1);
    }
    std::int64_t num = 1;
    if (coef == "-") {
        num = -1;
    } else if (coef == "+" || coef.empty()) {
        num = 1;
    } else {
        if (coef.front() == '+') {
            coef.remove_prefix(1);
        }
        num = parse_int(coef, token);
    }
    std::int64_t den = 1;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw InputError("malformed angle '" + std::string(token) + "'");
        }
        den = parse_int(rest.substr(1), token);
    }
    if (den <= 0) {
        throw InputError("malformed angle '" + std::string(token) + "'");
    }
    return pi_times(num, den);
}

std::optional<std::int64_t> Angle::reduced_multiple(double m) const {
    if (den_ == 0 || std::floor(m) != m || std::abs(m) > 1e9) {
        return std::nullopt;
    }
    const auto mi = static_cast<std::int64_t>(m);
    const std::int64_t period = 2 * den_;
    return positive_mod(positive_mod(num_, period) * positive_mod(mi, period), period);
}

double Angle::cos_of_multiple(double m) const {
    if (auto r = reduced_multiple(m)) {
        // angle*m = pi * r / den, r in [0, 2 den)
        const std::int64_t t = *r;
        if (t == 0) {
            return 1.0;
        }
        if (t == den_) {
            return -1.0;
        }
        if (2 * t == den_ || 2 * t == 3 * den_) {
            return 0.0;
        }
        // fold onto [0, pi] so that cos(-x) and cos(x) round identically
        const std::int64_t folded = t > den_ ? 2 * den_ - t : t;
        return std::cos(std::numbers::pi * static_cast<double>(folded) / static_cast<double>(den_));
    }
    return std::cos(radians_ * m);
}

double Angle::sin_of_multiple(double m) const {
    if (auto r = reduced_multiple(m)) {
        const std::int64_t t = *r;
        if (t == 0 || t == den_) {
            return 0.0;
        }
        if (2 * t == den_) {
            return 1.0;
        }
        if (2 * t == 3 * den_) {
            return -1.0;
        }
        if (t > den_) {
            return -std::sin(std::numbers::pi * static_cast<double>(2 * den_ - t) /
                             static_cast<double>(den_));
        }
        return std::sin(std::numbers::pi * static_cast<double>(t) / static_cast<double>(den_));
    }
    return std::sin(radians_ * m);
}

Angle Angle::operator-() const {
    Angle a = *this;
    a.radians_ = -radians_;
    a.num_ = -num_;
    return a;
}

std::string Angle::to_string() const {
    if (den_ != 0) {
        if (num_ == 0) {
            return "0";
        }
        std::string s;
        if (num_ == -1) {
            s = "-pi";
        } else if (num_ == 1) {
            s = "pi";
        } else {
            s = std::to_string(num_) + "pi";
        }
        if (den_ != 1) {
            s += "/" + std::to_string(den_);
        }
        return s;
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), radians_);
    return std::string(buf, ptr);
}

}  // namespace sfw
