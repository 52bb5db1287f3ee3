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

#include "sfw/bisep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "sfw/errors.hpp"
#include "sfw/kernels.hpp"
#include "sfw/seed.hpp"

namespace sfw {

namespace {

// Full-register bits contributed by each local configuration of `sites`
// (first site is the most significant local bit).
std::vector<std::size_t> local_offsets(int n_qubits, std::span<const int> sites) {
    std::vector<std::size_t> offsets(std::size_t{1} << sites.size());
    for (std::size_t local = 0; local < offsets.size(); ++local) {
        std::size_t full = 0;
        for (std::size_t k = 0; k < sites.size(); ++k) {
            if (local & (std::size_t{1} << (sites.size() - 1 - k))) {
                full |= site_mask(n_qubits, sites[k]);
            }
        }
        offsets[local] = full;
    }
    return offsets;
}

std::size_t local_index(std::size_t full, int n_qubits, std::span<const int> sites) {
    std::size_t local = 0;
    for (int s : sites) {
        local = (local << 1) | static_cast<std::size_t>((full & site_mask(n_qubits, s)) != 0);
    }
    return local;
}

struct PartGeometry {
    std::vector<int> rest_sites;
    std::vector<std::size_t> part_offsets;
    std::vector<std::size_t> rest_offsets;
};

void check_partition(int n_qubits, std::span<const std::vector<int>> parts) {
    std::vector<int> seen(static_cast<std::size_t>(n_qubits), 0);
    for (const auto &p : parts) {
        if (p.empty()) {
            throw InputError("see-saw parts must be nonempty");
        }
        for (int s : p) {
            if (s < 0 || s >= n_qubits || seen[static_cast<std::size_t>(s)]++) {
                throw InputError("see-saw parts must partition the register");
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw InputError("see-saw parts must partition the register");
    }
}

void check_optimizer_size(const WitnessSpec &spec) {
    if (spec.n_qubits() > kMaxDenseQubits) {
        throw ResourceError("see-saw optimization is limited to " +
                            std::to_string(kMaxDenseQubits) + " qubits");
    }
}

void check_options(const SeesawOptions &options) {
    if (options.restarts < 1 || options.max_iter < 1 || !(options.tol >= 0.0)) {
        throw InputError("see-saw needs restarts >= 1, max_iter >= 1 and tol >= 0");
    }
}

std::vector<StateVector> random_factors(std::span<const std::vector<int>> parts,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<StateVector> factors;
    factors.reserve(parts.size());
    for (const auto &p : parts) {
        factors.push_back(random_state(static_cast<int>(p.size()), rng));
    }
    return factors;
}

// Runs every restart (in parallel) and keeps the first best one.
SeesawRun best_of_restarts(const Eigen::MatrixXcd &op, int n_qubits,
                           std::span<const std::vector<int>> parts,
                           const SeesawOptions &options) {
    std::vector<std::optional<SeesawRun>> runs(static_cast<std::size_t>(options.restarts));
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < options.restarts; ++r) {
        runs[static_cast<std::size_t>(r)] =
            seesaw_run(op, n_qubits, parts,
                       random_factors(parts, restart_seed(options.seed,
                                                          static_cast<std::uint64_t>(r))),
                       options.tol, options.max_iter);
    }
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (runs[r]->value > runs[best]->value) {
            best = r;
        }
    }
    return std::move(*runs[best]);
}

}  // namespace

Bipartition Bipartition::from_part_a(int n_qubits, std::vector<int> part_a) {
    std::sort(part_a.begin(), part_a.end());
    part_a.erase(std::unique(part_a.begin(), part_a.end()), part_a.end());
    if (part_a.empty() || static_cast<int>(part_a.size()) >= n_qubits) {
        throw InputError("both sides of a bipartition must be nonempty");
    }
    if (part_a.front() < 0 || part_a.back() >= n_qubits) {
        throw InputError("bipartition site out of range");
    }
    Bipartition cut;
    for (int s = 0; s < n_qubits; ++s) {
        (std::binary_search(part_a.begin(), part_a.end(), s) ? cut.part_a : cut.part_b)
            .push_back(s);
    }
    if (cut.part_a.front() != 0) {
        std::swap(cut.part_a, cut.part_b);
    }
    return cut;
}

std::string Bipartition::to_string() const {
    auto side = [](const std::vector<int> &sites) {
        std::string s = "{";
        for (std::size_t k = 0; k < sites.size(); ++k) {
            s += (k ? "," : "") + std::to_string(sites[k] + 1);
        }
        return s + "}";
    };
    return side(part_a) + "|" + side(part_b);
}

std::vector<Bipartition> enumerate_bipartitions(int n_qubits) {
    if (n_qubits < 2) {
        throw InputError("bipartitions need at least two qubits");
    }
    if (n_qubits > 30) {
        throw ResourceError("too many qubits to enumerate bipartitions");
    }
    std::vector<Bipartition> cuts;
    const std::uint64_t count = (std::uint64_t{1} << (n_qubits - 1)) - 1;
    cuts.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<int> a{0};
        for (int s = 1; s < n_qubits; ++s) {
            if (mask & (std::uint64_t{1} << (s - 1))) {
                a.push_back(s);
            }
        }
        cuts.push_back(Bipartition::from_part_a(n_qubits, std::move(a)));
    }
    return cuts;
}

std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t restart) {
    return derive_seed(seed, restart);
}

StateVector random_state(int n_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    for (auto &a : amps) {
        const double re = normal(rng);
        const double im = normal(rng);
        a = {re, im};
    }
    return StateVector::normalized(n_qubits, std::move(amps));
}

SeesawRun seesaw_run(const Eigen::MatrixXcd &op, int n_qubits,
                     std::span<const std::vector<int>> parts, std::vector<StateVector> initial,
                     double tol, int max_iter) {
    check_partition(n_qubits, parts);
    if (initial.size() != parts.size()) {
        throw InputError("one initial factor per part is required");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    if (op.rows() != dim || op.cols() != dim) {
        throw InputError("operator dimension does not match the register");
    }

    std::vector<PartGeometry> geometry;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        PartGeometry g;
        for (int s = 0; s < n_qubits; ++s) {
            if (std::find(parts[p].begin(), parts[p].end(), s) == parts[p].end()) {
                g.rest_sites.push_back(s);
            }
        }
        g.part_offsets = local_offsets(n_qubits, parts[p]);
        g.rest_offsets = local_offsets(n_qubits, g.rest_sites);
        geometry.push_back(std::move(g));
    }

    SeesawRun run;
    run.factors = std::move(initial);
    double previous_sweep = -std::numeric_limits<double>::infinity();
    std::vector<Complex> rest_state;
    for (int sweep = 0; sweep < max_iter; ++sweep) {
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const auto &g = geometry[p];
            rest_state.assign(g.rest_offsets.size(), Complex{1.0, 0.0});
            for (std::size_t r = 0; r < g.rest_offsets.size(); ++r) {
                for (std::size_t q = 0; q < parts.size(); ++q) {
                    if (q != p) {
                        rest_state[r] *=
                            run.factors[q][local_index(g.rest_offsets[r], n_qubits, parts[q])];
                    }
                }
            }
            Eigen::MatrixXcd h =
                kernels::contract_operator(op, g.part_offsets, g.rest_offsets, rest_state);
            h = 0.5 * (h + h.adjoint()).eval();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
            const Eigen::Index top = h.rows() - 1;
            const Eigen::VectorXcd v = solver.eigenvectors().col(top);
            run.factors[p] = StateVector::normalized(static_cast<int>(parts[p].size()),
                                                     {v.data(), v.data() + v.size()});
            run.value = solver.eigenvalues()(top);
            run.history.push_back(run.value);
        }
        run.iterations = sweep + 1;
        if (run.value - previous_sweep < tol) {
            run.converged = true;
            break;
        }
        previous_sweep = run.value;
    }
    return run;
}

StateVector BisepResult::assembled() const {
    const std::vector<int> groups[2] = {best_cut.part_a, best_cut.part_b};
    return assemble_product(n_qubits, groups, best_state);
}

BisepResult seesaw_max(const WitnessSpec &spec, const Bipartition &cut,
                       const SeesawOptions &options) {
    check_optimizer_size(spec);
    check_options(options);
    const int n = spec.n_qubits();
    const Bipartition canonical = Bipartition::from_part_a(n, cut.part_a);
    if (canonical.part_b != cut.part_b && canonical.part_a != cut.part_b) {
        throw InputError("bipartition sides are inconsistent");
    }
    const Eigen::MatrixXcd op = sigma_operator(spec);
    const std::vector<int> parts[2] = {canonical.part_a, canonical.part_b};
    SeesawRun best = best_of_restarts(op, n, parts, options);
    return BisepResult{best.value,      canonical,          std::move(best.factors),
                       options.restarts, best.converged,     best.iterations,
                       std::move(best.history), n,          spec};
}

BisepResult bisep_bound(const WitnessSpec &spec, const SeesawOptions &options) {
    check_optimizer_size(spec);
    check_options(options);
    const int n = spec.n_qubits();
    const Eigen::MatrixXcd op = sigma_operator(spec);
    std::optional<BisepResult> best;
    int total_restarts = 0;
    for (const auto &cut : enumerate_bipartitions(n)) {
        const std::vector<int> parts[2] = {cut.part_a, cut.part_b};
        SeesawRun run = best_of_restarts(op, n, parts, options);
        total_restarts += options.restarts;
        if (!best || run.value > best->bound) {
            best = BisepResult{run.value,       cut,           std::move(run.factors),
                               0,               run.converged, run.iterations,
                               std::move(run.history), n,      spec};
        }
    }
    best->restarts_used = total_restarts;
    return std::move(*best);
}

double product_bound(const WitnessSpec &spec, const SeesawOptions &options) {
    check_optimizer_size(spec);
    check_options(options);
    const int n = spec.n_qubits();
    const Eigen::MatrixXcd op = sigma_operator(spec);
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < n; ++s) {
        parts.push_back({s});
    }
    return best_of_restarts(op, n, parts, options).value;
}

bool same_spec(const WitnessSpec &a, const WitnessSpec &b) {
    const auto &ca = a.coefficients();
    const auto &cb = b.coefficients();
    return a.n_qubits() == b.n_qubits() && a.k().value() == b.k().value() && ca.x == cb.x &&
           ca.y == cb.y && ca.z == cb.z && a.layout().positions() == b.layout().positions();
}

bool gme_detected(const StateVector &state, const WitnessSpec &spec, const BisepResult &bisep,
                  double tol) {
    if (!same_spec(spec, bisep.spec)) {
        throw InputError("biseparable bound was computed for a different witness");
    }
    return sigma_value(state, spec) > bisep.bound + tol;
}

}  // namespace sfw
