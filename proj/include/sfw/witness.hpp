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
#include <span>
#include <vector>

#include <boost/rational.hpp>
#include <Eigen/Dense>

#include "sfw/angle.hpp"
#include "sfw/correl.hpp"
#include "sfw/pauli.hpp"
#include "sfw/qstate.hpp"

namespace sfw {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational &r) { return boost::rational_cast<double>(r); }

/// Strict-negativity margin used by detects().
inline constexpr double kDetectionTolerance = 1e-9;

/// Weights (c_x, c_y, c_z) of the xx, yy and zz structure factors, each in [-1, 1].
struct Coefficients {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double operator[](PauliAxis a) const {
        return a == PauliAxis::x ? x : (a == PauliAxis::y ? y : z);
    }
    bool all_zero() const { return x == 0.0 && y == 0.0 && z == 0.0; }
};

/// Everything needed to define
///   Sigma(k) = 1/B(N,2) sum_{i<j} cos(k m_ij) sum_a c_a sigma_i^a sigma_j^a
/// and W(k) = 1 - Sigma(k).
class WitnessSpec {
  public:
    /// Uniform layout r_i = i - 1.
    WitnessSpec(int n_qubits, Angle k, Coefficients c);
    WitnessSpec(int n_qubits, Angle k, Coefficients c, SiteLayout layout);

    int n_qubits() const { return n_qubits_; }
    Angle k() const { return k_; }
    const Coefficients &coefficients() const { return c_; }
    const SiteLayout &layout() const { return layout_; }

    WitnessSpec with_k(Angle k) const;

    /// cos(k m_ij) / B(N,2) for 0-based i < j.
    double pair_weight(int site_i, int site_j) const;

  private:
    int n_qubits_;
    Angle k_;
    Coefficients c_;
    SiteLayout layout_;
};

/// <Sigma(k)>
double sigma_value(const StateVector &state, const WitnessSpec &spec);
double sigma_value(const DensityMatrix &state, const WitnessSpec &spec);

/// <W(k)> = 1 - <Sigma(k)>; negative certifies entanglement.
double witness_value(const StateVector &state, const WitnessSpec &spec);
double witness_value(const DensityMatrix &state, const WitnessSpec &spec);

/// witness_value < -tol
bool detects(const StateVector &state, const WitnessSpec &spec,
             double tol = kDetectionTolerance);
bool detects(const DensityMatrix &state, const WitnessSpec &spec,
             double tol = kDetectionTolerance);

/// <N,l| Sigma~(0) |N,l> for c = (1, 1, -1):
/// (4 l (N - l) - (N - 2l)^2 + N) / (N (N - 1)).
Rational dicke_sigma_closed_form(int n_qubits, int l);

/// <N,l^ph| Sigma(pi) |N,l^ph>. Without z: 2 l (N - l) / B(N,2) for l = N/2 (even N)
/// or l = (N +/- 1)/2 (odd N). With c_z = 1 only (4,2) and (6,3) are covered.
/// Anything else throws UnsupportedCaseError.
Rational phased_dicke_sigma_closed_form(int n_qubits, int l, bool with_z);

/// Dense Hermitian matrix of Sigma(k); N <= 12.
Eigen::MatrixXcd sigma_operator(const WitnessSpec &spec);

struct ScanRecord {
    Angle k;
    double sigma;
    double witness;
};

std::vector<ScanRecord> scan_k(const StateVector &state, const Coefficients &c,
                               std::span<const Angle> k_grid,
                               const std::optional<SiteLayout> &layout = std::nullopt);
std::vector<ScanRecord> scan_k(const DensityMatrix &state, const Coefficients &c,
                               std::span<const Angle> k_grid,
                               const std::optional<SiteLayout> &layout = std::nullopt);

}  // namespace sfw
