// SPDX-License-Identifier: Apache-2.0
//
// ostbc-cr-precoder: minimum-variance OSTBC precoding for cognitive radio
// Copyright (C) 2026 The ostbc-cr-precoder authors
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

#include <random>

#include "ostbccr/channel.hpp"
#include "ostbccr/ostbc.hpp"
#include "ostbccr/precoder.hpp"
#include "ostbccr/realify.hpp"

using namespace ostbccr;

namespace {

PrecoderInputs make_inputs(CodeName name) {
    const OstbcCode code = build_code(name);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n;
    ComplexMat h(1, code.n_tx);
    ComplexMat g(2, code.n_tx);
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        h(i) = cplx(n(rng), n(rng));
    }
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        g(i) = cplx(n(rng), n(rng));
    }
    const RealMat heq = realify_channel(h, code.block_length);
    const RealMat geq = realify_channel(g, code.block_length);
    PrecoderInputs in;
    in.a = dispersion(code);
    in.kappa = code.kappa;
    in.r_s = heq.transpose() * heq;
    in.r_p = geq.transpose() * geq + 0.05 * RealMat::Identity(heq.cols(), heq.cols());
    in.n_tx = code.n_tx;
    return in;
}

void BM_Solve(benchmark::State& state) {
    const PrecoderInputs in = make_inputs(static_cast<CodeName>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve(in));
    }
}
BENCHMARK(BM_Solve)->Arg(static_cast<int>(CodeName::C2))->Arg(static_cast<int>(CodeName::C4));

// Power-independent part only; what a sweep pays once per instance.
void BM_Analyze(benchmark::State& state) {
    const PrecoderInputs in = make_inputs(static_cast<CodeName>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(in));
    }
}
BENCHMARK(BM_Analyze)->Arg(static_cast<int>(CodeName::C2))->Arg(static_cast<int>(CodeName::C4));

void BM_OracleC2(benchmark::State& state) {
    const PrecoderInputs in = make_inputs(CodeName::C2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_solve(in, 1.0));
    }
}
BENCHMARK(BM_OracleC2);

void BM_TiltCorrelation(benchmark::State& state) {
    LinkConfig cfg;
    cfg.n_rx = 2;
    cfg.n_paths = static_cast<int>(state.range(0));
    Rng rng = make_stream(1, 0, 0);
    const PathSet geometry = draw_paths(cfg, rng);
    for (auto _ : state) {
        const TiltCorrelation tc(geometry, cfg, Polarization::V, 2, 2000, rng);
        benchmark::DoNotOptimize(tc.at(Polarization::V, 0.3));
    }
}
BENCHMARK(BM_TiltCorrelation)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
