// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The hybridmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "hybridmimo/channel.hpp"
#include "hybridmimo/precoding.hpp"
#include "hybridmimo/simulator.hpp"

namespace hm = hybridmimo;

namespace {

void BM_PhiloxStream(benchmark::State& state)
{
    hm::RngStream s(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.next_u64());
    }
}
BENCHMARK(BM_PhiloxStream);

void BM_ComplexGaussian(benchmark::State& state)
{
    hm::RngStream s(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.cgauss());
    }
}
BENCHMARK(BM_ComplexGaussian);

void BM_GenerateCodebook(benchmark::State& state)
{
    const auto bits = static_cast<int>(state.range(0));
    const auto r = hm::correlation_matrix(0, 6, 20, hm::Bits(2));
    std::uint64_t t = 0;
    for (auto _ : state) {
        hm::RngStream s(1, t++);
        benchmark::DoNotOptimize(hm::generate_codebook(s, 6, hm::Bits(bits), r));
    }
}
BENCHMARK(BM_GenerateCodebook)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_QuantizeEffectiveChannel(benchmark::State& state)
{
    const auto r = hm::correlation_matrix(0, 6, 20, hm::Bits(2));
    hm::RngStream s(2, 0);
    const auto cb = hm::generate_codebook(s, 6, hm::Bits(10), r);
    const auto g = hm::sample_cgauss(s, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hm::quantize_effective_channel(g, cb));
    }
}
BENCHMARK(BM_QuantizeEffectiveChannel)->Unit(benchmark::kMicrosecond);

void BM_HermitianSolve(benchmark::State& state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    hm::RngStream s(3, 0);
    hm::CMat a(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (auto& v : a.row(i)) {
            v = s.cgauss();
        }
    }
    const auto gram = a.adjoint() * a;
    const auto eye = hm::CMat::identity(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hm::hermitian_solve(gram, eye));
    }
}
BENCHMARK(BM_HermitianSolve)->Arg(4)->Arg(6)->Arg(16);

void BM_RunTrial(benchmark::State& state)
{
    hm::ScenarioConfig c;
    c.b2 = hm::Bits(static_cast<int>(state.range(0)));
    c.snr_db = {-10, -5, 0, 5, 10, 15, 20, 25, 30};
    const hm::Experiment e(c);
    std::uint64_t t = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(e.run_trial(t++));
    }
}
BENCHMARK(BM_RunTrial)->Arg(6)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
