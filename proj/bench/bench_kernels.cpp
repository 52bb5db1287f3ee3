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

// OpenMP kernels against their serial references.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "sfw/kernels.hpp"
#include "sfw/qstate.hpp"

namespace {

using sfw::Complex;
using sfw::PauliAxis;

std::vector<Complex> random_amplitudes(int n) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << n);
    for (auto &x : a) {
        x = {g(rng), g(rng)};
    }
    return a;
}

Eigen::MatrixXcd random_matrix(int n) {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    const Eigen::Index d = Eigen::Index{1} << n;
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            m(r, c) = {g(rng), g(rng)};
        }
    }
    return m;
}

template <bool Parallel> void BM_PairExpectation(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto psi = random_amplitudes(n);
    for (auto _ : state) {
        Complex v;
        if constexpr (Parallel) {
            v = sfw::kernels::pauli_pair_expectation(psi, n, 0, n - 1, PauliAxis::y, PauliAxis::y);
        } else {
            v = sfw::kernels::serial::pauli_pair_expectation(psi, n, 0, n - 1, PauliAxis::y, PauliAxis::y);
        }
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.size()));
}

template <bool Parallel> void BM_CollectiveSpin(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto psi = random_amplitudes(n);
    for (auto _ : state) {
        auto v = Parallel ? sfw::kernels::apply_collective_spin(psi, n, PauliAxis::x)
                          : sfw::kernels::serial::apply_collective_spin(psi, n, PauliAxis::x);
        benchmark::DoNotOptimize(v.data());
    }
}

template <bool Parallel> void BM_Depolarizing(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    Eigen::MatrixXcd rho = random_matrix(n);
    for (auto _ : state) {
        if constexpr (Parallel) {
            sfw::kernels::apply_depolarizing(rho, n, n / 2, 0.1);
        } else {
            sfw::kernels::serial::apply_depolarizing(rho, n, n / 2, 0.1);
        }
        benchmark::DoNotOptimize(rho.data());
    }
}

template <bool Parallel> void BM_PairOperator(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<sfw::kernels::PairTerm> terms;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (PauliAxis a : sfw::kPauliAxes) {
                terms.push_back({i, j, a, a, 1.0});
            }
        }
    }
    for (auto _ : state) {
        auto m = Parallel ? sfw::kernels::pair_operator(n, terms)
                          : sfw::kernels::serial::pair_operator(n, terms);
        benchmark::DoNotOptimize(m.data());
    }
}

}  // namespace

BENCHMARK(BM_PairExpectation<true>)->DenseRange(12, 20, 4);
BENCHMARK(BM_PairExpectation<false>)->DenseRange(12, 20, 4);
BENCHMARK(BM_CollectiveSpin<true>)->DenseRange(12, 20, 4);
BENCHMARK(BM_CollectiveSpin<false>)->DenseRange(12, 20, 4);
BENCHMARK(BM_Depolarizing<true>)->DenseRange(6, 10, 2);
BENCHMARK(BM_Depolarizing<false>)->DenseRange(6, 10, 2);
BENCHMARK(BM_PairOperator<true>)->DenseRange(4, 8, 2);
BENCHMARK(BM_PairOperator<false>)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
