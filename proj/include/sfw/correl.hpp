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

#include <vector>

#include "sfw/angle.hpp"
#include "sfw/pauli.hpp"
#include "sfw/qstate.hpp"

namespace sfw {

/// Site positions r_1 < r_2 < ... < r_N in units of the lattice spacing.
class SiteLayout {
  public:
    /// r_i = i - 1.
    static SiteLayout uniform(int n_sites);

    /// Throws InputError unless strictly increasing and finite.
    explicit SiteLayout(std::vector<double> positions);

    int size() const { return static_cast<int>(positions_.size()); }
    const std::vector<double> &positions() const { return positions_; }
    /// r_j - r_i
    double separation(int site_i, int site_j) const;

  private:
    std::vector<double> positions_;
};

/// <sigma_i^a sigma_j^b>, 0-based sites with site_i < site_j.
double two_point(const StateVector &state, int site_i, int site_j, PauliAxis a, PauliAxis b);
double two_point(const DensityMatrix &state, int site_i, int site_j, PauliAxis a, PauliAxis b);

/// <J_a^2> with J_a = 1/2 sum_s sigma_s^a, evaluated by applying J_a directly.
double collective_spin_sq(const StateVector &state, PauliAxis a);
double collective_spin_sq(const DensityMatrix &state, PauliAxis a);

/// S^ab(k) = sum_{i<j} exp(i k (r_j - r_i)) <sigma_i^a sigma_j^b>.
Complex structure_factor(const StateVector &state, Angle k, PauliAxis a, PauliAxis b,
                         const SiteLayout &layout);
Complex structure_factor(const DensityMatrix &state, Angle k, PauliAxis a, PauliAxis b,
                         const SiteLayout &layout);

struct IdentitySides {
    double pair_sum;        // S^aa(0) from the two-point correlators
    double collective_form; // (4 <J_a^2> - N) / 2
};

IdentitySides verify_collective_identity(const StateVector &state, PauliAxis a);
IdentitySides verify_collective_identity(const DensityMatrix &state, PauliAxis a);

struct CorrelatorRow {
    int site_i; // 0-based
    int site_j;
    PauliAxis a;
    PauliAxis b;
    double value;
};

/// All <sigma_i^a sigma_j^b> for i < j and every axis pair, ordered by (i, j, a, b).
std::vector<CorrelatorRow> correlator_table(const StateVector &state);
std::vector<CorrelatorRow> correlator_table(const DensityMatrix &state);

}  // namespace sfw
