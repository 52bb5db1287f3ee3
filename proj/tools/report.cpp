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

#include "report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <sstream>

#include <Eigen/Dense>

#include "sfw/bisep.hpp"
#include "sfw/correl.hpp"
#include "sfw/noise.hpp"
#include "sfw/qstate.hpp"
#include "sfw/sampling.hpp"
#include "sfw/seed.hpp"
#include "sfw/witness.hpp"

namespace sfw::report {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

const WitnessSpec dicke_spec(int n) { return {n, Angle{}, {1.0, 1.0, -1.0}}; }
const WitnessSpec phased_spec(int n, double cz) { return {n, Angle::pi_times(1), {1.0, 1.0, cz}}; }

StateVector random_pure(int n, std::mt19937_64 &rng) { return random_state(n, rng); }

WitnessSpec random_spec(int n, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> gap(0.5, 1.5);
    std::vector<double> r(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) {
        r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i - 1)] + gap(rng);
    }
    return {n, Angle::radians(angle(rng)), {unit(rng), unit(rng), unit(rng)}, SiteLayout(r)};
}

// Sign of every weight-l basis string of the printed phased Dicke states.
struct PrintedTerm {
    const char *bits;
    int sign;
};

constexpr PrintedTerm kPhasedDicke4[] = {{"0011", 1},  {"1100", 1},  {"0110", 1},
                                         {"1001", 1},  {"0101", -1}, {"1010", -1}};

constexpr PrintedTerm kPhasedDicke6[] = {
    {"111000", 1},  {"001110", 1},  {"010101", 1},  {"011010", 1},  {"100011", 1},
    {"100110", 1},  {"101001", 1},  {"101100", 1},  {"110010", 1},  {"001011", 1},
    {"000111", -1}, {"110001", -1}, {"101010", -1}, {"100101", -1}, {"011100", -1},
    {"011001", -1}, {"010110", -1}, {"010011", -1}, {"001101", -1}, {"110100", -1}};

bool matches_printed(const StateVector &state, std::span<const PrintedTerm> terms) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(terms.size()));
    double covered = 0.0;
    for (const auto &t : terms) {
        const Complex a = state[basis_index(t.bits)];
        if (std::abs(a - Complex(t.sign * amp, 0.0)) > 1e-12) {
            return false;
        }
        covered += std::norm(a);
    }
    return std::abs(covered - 1.0) < 1e-12;
}

// Boundary of detects(theta) on (lo, hi): not detected at lo, detected at hi.
template <class Detect> double bisect_boundary(Detect &&detected, double lo, double hi) {
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (detected(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

template <class Make>
bool window_holds(Make &&make, const WitnessSpec &spec, double boundary, double &found) {
    auto detected = [&](double t) { return detects(make(t), spec); };
    found = bisect_boundary(detected, 1e-3, kPi / 2 - 1e-3);
    bool ok = std::abs(found - boundary) <= 1e-6;
    for (int i = 1; i < 200; ++i) {
        const double inside = boundary + (kPi / 2 - boundary) * i / 200.0;
        const double outside = boundary * i / 200.0;
        ok = ok && detected(inside) && !detected(outside);
    }
    return ok;
}

Eigen::Matrix2cd pauli(PauliAxis a) {
    Eigen::Matrix2cd m;
    switch (a) {
    case PauliAxis::x:
        m << 0, 1, 1, 0;
        break;
    case PauliAxis::y:
        m << 0, Complex(0, -1), Complex(0, 1), 0;
        break;
    case PauliAxis::z:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

// max over a Bloch-sphere grid for the single site `lone`, with the other
// one or two sites optimized exactly through the top eigenvalue.
double grid_search_cut(const WitnessSpec &spec, int lone) {
    const int n = spec.n_qubits();
    std::vector<int> rest;
    for (int s = 0; s < n; ++s) {
        if (s != lone) {
            rest.push_back(s);
        }
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << rest.size());
    auto on_rest = [&](int site, PauliAxis a) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
        for (int s : rest) {
            m = kron(m, s == site ? Eigen::MatrixXcd(pauli(a)) : Eigen::MatrixXcd::Identity(2, 2));
        }
        return m;
    };
    Eigen::MatrixXcd fixed = Eigen::MatrixXcd::Zero(dim, dim);
    std::array<Eigen::MatrixXcd, 3> lin; // coefficient of each Bloch component
    for (auto &m : lin) {
        m = Eigen::MatrixXcd::Zero(dim, dim);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double w = spec.pair_weight(i, j);
            for (PauliAxis a : kPauliAxes) {
                const double c = w * spec.coefficients()[a];
                if (i == lone || j == lone) {
                    lin[axis_index(a)] += c * on_rest(i == lone ? j : i, a);
                } else {
                    fixed += c * on_rest(i, a) * on_rest(j, a);
                }
            }
        }
    }
    double best = -1e300;
    const int n_theta = 181;
    const int n_phi = 360;
    for (int t = 0; t < n_theta; ++t) {
        const double theta = kPi * t / (n_theta - 1);
        for (int p = 0; p < (t == 0 || t == n_theta - 1 ? 1 : n_phi); ++p) {
            const double phi = 2.0 * kPi * p / n_phi;
            const double nx = std::sin(theta) * std::cos(phi);
            const double ny = std::sin(theta) * std::sin(phi);
            const double nz = std::cos(theta);
            const Eigen::MatrixXcd h = fixed + nx * lin[0] + ny * lin[1] + nz * lin[2];
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
            best = std::max(best, es.eigenvalues()(dim - 1));
        }
    }
    return best;
}

Check check_dicke_closed_form() {
    double worst = 0.0;
    bool exact = true;
    for (int n = 2; n <= 10; ++n) {
        for (int l = 0; l <= n; ++l) {
            const Rational closed = dicke_sigma_closed_form(n, l);
            worst = std::max(worst, std::abs(sigma_value(make_dicke(n, l), dicke_spec(n)) -
                                             to_double(closed)));
        }
        if (n % 2 == 0) {
            exact = exact && dicke_sigma_closed_form(n, n / 2) == Rational(n + 1, n - 1);
        } else {
            const Rational odd(n * (n + 1) - 2, n * (n - 1));
            exact = exact && dicke_sigma_closed_form(n, (n - 1) / 2) == odd &&
                    dicke_sigma_closed_form(n, (n + 1) / 2) == odd;
        }
    }
    exact = exact && dicke_sigma_closed_form(6, 2) == Rational(17, 15);
    const double v62 = sigma_value(make_dicke(6, 2), dicke_spec(6));
    return {"1", "Dicke closed form",
            "max |numeric - closed| = " + fmt(worst) + ", <6,2|S|6,2> = " + fmt(v62),
            worst <= 1e-12 && exact && std::abs(v62 - 17.0 / 15.0) <= 1e-12};
}

Check check_structure_factor(std::mt19937_64 &rng) {
    double worst = 0.0;
    for (int n = 2; n <= 10; ++n) {
        const SiteLayout layout = SiteLayout::uniform(n);
        for (int l = 0; l <= n; ++l) {
            const StateVector d = make_dicke(n, l);
            const double xx = structure_factor(d, Angle{}, PauliAxis::x, PauliAxis::x, layout).real();
            const double yy = structure_factor(d, Angle{}, PauliAxis::y, PauliAxis::y, layout).real();
            const double zz = structure_factor(d, Angle{}, PauliAxis::z, PauliAxis::z, layout).real();
            const double lnl = l * (n - l);
            const double zexp = ((n - 2.0 * l) * (n - 2.0 * l) - n) / 2.0;
            worst = std::max({worst, std::abs(xx - lnl), std::abs(yy - lnl), std::abs(zz - zexp)});
        }
    }
    double worst_identity = 0.0;
    std::uniform_int_distribution<int> size(2, 6);
    for (int t = 0; t < 100; ++t) {
        const StateVector s = random_pure(size(rng), rng);
        for (PauliAxis a : kPauliAxes) {
            const auto sides = verify_collective_identity(s, a);
            worst_identity = std::max(worst_identity, std::abs(sides.pair_sum - sides.collective_form));
        }
    }
    return {"2", "structure-factor identities",
            "Dicke max dev " + fmt(worst) + ", collective identity max dev " + fmt(worst_identity),
            worst <= 1e-12 && worst_identity <= 1e-10};
}

Check check_phased_dicke() {
    double worst = 0.0;
    for (int n = 2; n <= 10; ++n) {
        const WitnessSpec spec = phased_spec(n, 0.0);
        if (n % 2 == 0) {
            worst = std::max(worst, std::abs(sigma_value(make_phased_dicke(n, n / 2), spec) -
                                             static_cast<double>(n) / (n - 1)));
        } else {
            for (int l : {(n - 1) / 2, (n + 1) / 2}) {
                worst = std::max(worst, std::abs(sigma_value(make_phased_dicke(n, l), spec) -
                                                 static_cast<double>(n + 1) / n));
            }
        }
    }
    const double s4 = sigma_value(make_phased_dicke(4, 2), phased_spec(4, 1.0));
    const double s6 = sigma_value(make_phased_dicke(6, 3), phased_spec(6, 1.0));
    const bool thresholds = collective_threshold(Rational(13, 9)) == Rational(4, 13) &&
                            collective_threshold(Rational(31, 25)) == Rational(6, 31);
    return {"3", "phased Dicke values",
            "c_z=0 max dev " + fmt(worst) + ", D4 " + fmt(s4) + ", D6 " + fmt(s6),
            worst <= 1e-12 && std::abs(s4 - 13.0 / 9.0) <= 1e-12 &&
                std::abs(s6 - 31.0 / 25.0) <= 1e-12 && thresholds};
}

Check check_sign_patterns() {
    const bool d4 = matches_printed(make_phased_dicke(4, 2), kPhasedDicke4);
    const bool d6 = matches_printed(make_phased_dicke(6, 3), kPhasedDicke6);
    return {"4", "phased Dicke sign patterns",
            std::string("D4 ") + (d4 ? "matches" : "differs") + ", D6 " + (d6 ? "matches" : "differs"),
            d4 && d6};
}

Check check_cross_detection() {
    // W(pi) is paired with c_x = c_y = 1 and c_z in {1, 0, -1}; an arbitrary c
    // cannot work here since flipping all signs maps W(pi) onto W(0) for N = 2.
    double worst_dicke = -1e300;
    bool any_dicke = false;
    for (double cz : {1.0, 0.0, -1.0}) {
        for (int n = 2; n <= 6; ++n) {
            const WitnessSpec spec(n, Angle::pi_times(1), {1.0, 1.0, cz});
            for (int l = 0; l <= n; ++l) {
                const StateVector d = make_dicke(n, l);
                worst_dicke = std::max(worst_dicke, sigma_value(d, spec));
                any_dicke = any_dicke || detects(d, spec);
            }
        }
    }
    const StateVector d4 = make_phased_dicke(4, 2);
    double worst_ph = -1e300;
    bool any = false;
    for (int ix = -20; ix <= 20; ++ix) {
        for (int iy = -20; iy <= 20; ++iy) {
            for (int iz = -20; iz <= 20; ++iz) {
                const WitnessSpec spec(4, Angle{}, {ix * 0.05, iy * 0.05, iz * 0.05});
                worst_ph = std::max(worst_ph, sigma_value(d4, spec));
                any = any || detects(d4, spec);
            }
        }
    }
    return {"5", "cross-detection",
            "max_c <N,l|S(pi)|N,l> = " + fmt(worst_dicke) + ", max_c <D4|S(0)|D4> = " + fmt(worst_ph),
            !any_dicke && !any};
}

Check check_product_bound(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> size(2, 6);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 1e300;
    for (int t = 0; t < 10000; ++t) {
        const int n = size(rng);
        std::vector<BlochVector> blochs;
        for (int q = 0; q < n; ++q) {
            BlochVector b{normal(rng), normal(rng), normal(rng)};
            const double scale = std::cbrt(unit(rng)) / b.norm();
            blochs.push_back({b.x * scale, b.y * scale, b.z * scale});
        }
        worst = std::min(worst, witness_value(make_product_density(blochs), random_spec(n, rng)));
    }
    return {"6", "product-state bound", "min witness over 10^4 product states = " + fmt(worst),
            worst >= -1e-9};
}

Check check_windows() {
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    double b4 = 0.0;
    const double dg = std::acos(3.0 * std::sqrt(2.0 / 19.0));
    const WitnessSpec plus(4, Angle{}, {1.0, -1.0, 1.0});
    const WitnessSpec minus(4, Angle{}, {-1.0, 1.0, 1.0});
    bool ok = window_holds([](double t) { return make_ghz_superposition(t, BranchSign::plus); },
                           plus, kPi / 4, b1);
    ok = window_holds([](double t) { return make_ghz_superposition(t, BranchSign::minus); }, minus,
                      kPi / 4, b2) &&
         ok;
    ok = window_holds([](double t) { return make_dicke_ghz_superposition(t, BranchSign::plus); },
                      plus, dg, b3) &&
         ok;
    ok = window_holds([](double t) { return make_dicke_ghz_superposition(t, BranchSign::minus); },
                      minus, dg, b4) &&
         ok;
    return {"7", "detection windows",
            "GHZ+ " + fmt(b1) + ", GHZ- " + fmt(b2) + " (pi/4 = " + fmt(kPi / 4) + "), DG+ " +
                fmt(b3) + ", DG- " + fmt(b4) + " (arccos 3 sqrt(2/19) = " + fmt(dg) + ")",
            ok};
}

Check check_thresholds() {
    bool ok = true;
    double worst = 0.0;
    for (int n = 2; n <= 10; n += 2) {
        const StateVector d = make_dicke(n, n / 2);
        const StateVector ph = make_phased_dicke(n, n / 2);
        ok = ok && collective_threshold(dicke_sigma_closed_form(n, n / 2)) == Rational(2, n + 1);
        ok = ok && collective_threshold(phased_dicke_sigma_closed_form(n, n / 2, false)) ==
                       Rational(1, n);
        worst = std::max({worst,
                          std::abs(collective_threshold(d, dicke_spec(n)) - 2.0 / (n + 1)),
                          std::abs(collective_threshold(ph, phased_spec(n, 0.0)) - 1.0 / n),
                          std::abs(individual_threshold(d, dicke_spec(n)) -
                                   (1.0 - std::sqrt((n - 1.0) / (n + 1.0)))),
                          std::abs(individual_threshold(ph, phased_spec(n, 0.0)) -
                                   (1.0 - std::sqrt((n - 1.0) / n)))});
        // the z term helps
        const WitnessSpec dicke_no_z(n, Angle{}, {1.0, 1.0, 0.0});
        ok = ok && collective_threshold(d, dicke_spec(n)) > collective_threshold(d, dicke_no_z) &&
             individual_threshold(d, dicke_spec(n)) > individual_threshold(d, dicke_no_z);
    }
    const StateVector d4 = make_phased_dicke(4, 2);
    const StateVector d6 = make_phased_dicke(6, 3);
    const double p4 = collective_threshold(d4, phased_spec(4, 1.0));
    const double p6 = collective_threshold(d6, phased_spec(6, 1.0));
    const double q4 = individual_threshold(d4, phased_spec(4, 1.0));
    const double q6 = individual_threshold(d6, phased_spec(6, 1.0));
    ok = ok && collective_threshold(phased_dicke_sigma_closed_form(4, 2, true)) == Rational(4, 13) &&
         collective_threshold(phased_dicke_sigma_closed_form(6, 3, true)) == Rational(6, 31);
    worst = std::max({worst, std::abs(p4 - 4.0 / 13.0), std::abs(p6 - 6.0 / 31.0),
                      std::abs(q4 - (1.0 - 3.0 / std::sqrt(13.0))),
                      std::abs(q6 - (1.0 - 5.0 / std::sqrt(31.0)))});
    ok = ok && std::abs(q4 - 0.168) < 5e-4 && std::abs(q6 - 0.102) < 5e-4;
    ok = ok && p4 > collective_threshold(d4, phased_spec(4, 0.0)) &&
         p6 > collective_threshold(d6, phased_spec(6, 0.0)) &&
         q4 > individual_threshold(d4, phased_spec(4, 0.0)) &&
         q6 > individual_threshold(d6, phased_spec(6, 0.0));
    return {"8", "robustness thresholds",
            "p*(D4) = " + fmt(p4) + ", p*(D6) = " + fmt(p6) + ", q*(D4) = " + fmt(q4) +
                ", q*(D6) = " + fmt(q6) + ", max dev " + fmt(worst),
            ok && worst <= 1e-12};
}

Check check_channels(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> size(2, 6);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const int n = size(rng);
        const StateVector s = random_pure(n, rng);
        const auto sides = kraus_crosscheck(s, random_spec(n, rng), unit(rng));
        worst = std::max(worst, std::abs(sides.observable_side - sides.state_side));
    }
    return {"9", "channel equivalence", "max |factor law - Kraus| = " + fmt(worst), worst <= 1e-12};
}

Check check_bisep(const Options &options, std::vector<Check> &extra) {
    const SeesawOptions opts{options.restarts, 1e-10, 500, options.seed};
    const WitnessSpec s4 = phased_spec(4, 1.0);
    const WitnessSpec s6 = phased_spec(6, 1.0);
    const BisepResult r4 = bisep_bound(s4, opts);
    const BisepResult r6 = bisep_bound(s6, opts);
    const double p4 = product_bound(s4, opts);
    const double p6 = product_bound(s6, opts);
    const double pd = product_bound(dicke_spec(4), opts);
    const bool gme = gme_detected(make_phased_dicke(4, 2), s4, r4) &&
                     gme_detected(make_phased_dicke(6, 3), s6, r6);
    const bool ok = std::abs(r4.bound - 1.187) <= 0.01 && std::abs(r6.bound - 1.158) <= 0.01 &&
                    gme && std::max({p4, p6, pd}) <= 1.0 + 1e-6;

    // soundness and the small-register grid oracle
    const double re4 = std::abs(sigma_value(r4.assembled(), s4) - r4.bound);
    const double re6 = std::abs(sigma_value(r6.assembled(), s6) - r6.bound);
    double worst_grid = 0.0;
    for (int n : {2, 3}) {
        for (const WitnessSpec &spec :
             {WitnessSpec(n, Angle{}, {1.0, 1.0, 1.0}), WitnessSpec(n, Angle::pi_times(1), {1.0, 1.0, 1.0}),
              WitnessSpec(n, Angle{}, {1.0, 1.0, -1.0})}) {
            const BisepResult r = bisep_bound(spec, opts);
            double grid = -1e300;
            for (int lone = 0; lone < n; ++lone) {
                grid = std::max(grid, grid_search_cut(spec, lone));
            }
            worst_grid = std::max(worst_grid, std::abs(r.bound - grid));
        }
    }
    extra.push_back({"11", "see-saw soundness",
                     "re-evaluation dev " + fmt(std::max(re4, re6)) + ", N<=3 grid dev " +
                         fmt(worst_grid),
                     std::max(re4, re6) <= 1e-9 && worst_grid <= 1e-3});
    return {"10", "biseparable bounds",
            "N=4 " + fmt(r4.bound) + " (" + r4.best_cut.to_string() + "), N=6 " + fmt(r6.bound) +
                " (" + r6.best_cut.to_string() + "), product max " + fmt(std::max({p4, p6, pd})),
            ok};
}

Check check_sampling(const Options &options) {
    const StateVector d42 = make_dicke(4, 2);
    const StateVector d4 = make_phased_dicke(4, 2);
    const WitnessSpec s42 = dicke_spec(4);
    const WitnessSpec s4 = phased_spec(4, 1.0);
    const auto e1 = estimate_witness(d42, s42, {1000000, derive_seed(options.seed, 1)});
    const auto e2 = estimate_witness(d4, s4, {1000000, derive_seed(options.seed, 2)});
    const double z1 = std::abs(e1.estimate - witness_value(d42, s42)) / e1.std_error;
    const double z2 = std::abs(e2.estimate - witness_value(d4, s4)) / e2.std_error;
    std::vector<std::int64_t> grid;
    for (int e = 4; e <= 12; ++e) {
        grid.push_back(static_cast<std::int64_t>(std::llround(std::pow(10.0, e / 2.0))));
    }
    const auto curve = convergence_curve(d4, s4, grid, derive_seed(options.seed, 3));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto &p : curve) {
        const double x = std::log(static_cast<double>(p.shots));
        const double y = std::log(p.std_error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(curve.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return {"12", "finite-shot sampling",
            "|4,2> z = " + fmt(z1) + ", D4 z = " + fmt(z2) + ", log-log slope " + fmt(slope),
            z1 <= 5.0 && z2 <= 5.0 && std::abs(slope + 0.5) <= 0.1};
}

}  // namespace

std::vector<Check> reproduce_paper(const Options &options) {
    std::mt19937_64 rng(derive_seed(options.seed, 0));
    std::vector<Check> checks;
    std::vector<Check> extra;
    checks.push_back(check_dicke_closed_form());
    checks.push_back(check_structure_factor(rng));
    checks.push_back(check_phased_dicke());
    checks.push_back(check_sign_patterns());
    checks.push_back(check_cross_detection());
    checks.push_back(check_product_bound(rng));
    checks.push_back(check_windows());
    checks.push_back(check_thresholds());
    checks.push_back(check_channels(rng));
    checks.push_back(check_bisep(options, extra));
    checks.insert(checks.end(), extra.begin(), extra.end());
    checks.push_back(check_sampling(options));
    return checks;
}

}  // namespace sfw::report
