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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ostbccr/ostbc.hpp"
#include "ostbccr/precoder.hpp"
#include "ostbccr/realify.hpp"

using namespace ostbccr;

namespace {

PrecoderInputs identity_case(CodeName name = CodeName::C2) {
    const OstbcCode code = build_code(name);
    PrecoderInputs in;
    in.a = dispersion(code);
    in.kappa = code.kappa;
    const auto dim = in.a.rows();
    in.r_s = RealMat::Identity(dim, dim);
    in.r_p = RealMat::Identity(dim, dim);
    in.n_tx = code.n_tx;
    in.epsilon_reg = 0.0;
    return in;
}

// Rayleigh secondary link with n_rx antennas, generic SPD interference correlation.
PrecoderInputs random_case(CodeName name, int n_rx, std::uint64_t seed) {
    const OstbcCode code = build_code(name);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n;
    ComplexMat h(n_rx, code.n_tx);
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        h(i) = cplx(n(rng), n(rng)) / std::sqrt(2.0);
    }
    const RealMat heq = realify_channel(h, code.block_length);
    PrecoderInputs in;
    in.a = dispersion(code);
    in.kappa = code.kappa;
    in.r_s = heq.transpose() * heq;
    const auto dim = in.a.rows();
    RealMat b(dim, dim);
    for (Eigen::Index i = 0; i < b.size(); ++i) {
        b(i) = n(rng);
    }
    in.r_p = b * b.transpose() / static_cast<double>(dim) + 0.05 * RealMat::Identity(dim, dim);
    in.n_tx = code.n_tx;
    return in;
}

} // namespace

TEST(Identity, ClosedFormValues) {
    const PrecoderInputs in = identity_case();
    const QResult q = compute_q(in.a, in.r_s, in.r_p, in.epsilon_reg);
    EXPECT_LT((q.q - 0.5 * RealMat::Identity(4, 4)).norm(), 1e-14);
    EXPECT_NEAR(q.trace, 2.0, 1e-14);

    const RealMat w = solve_w(in, 1.0);
    EXPECT_LT((w - 0.25 * in.a * in.a.transpose()).norm(), 1e-14);
    EXPECT_NEAR(interference_power(w, in.r_p, 1.0, 2), 0.5, 1e-14);
    EXPECT_NEAR(interference_power(w, in.r_p, 3.0, 2), 1.5, 1e-14);

    const GammaDelta gd = gamma_delta(in.a, in.r_s, in.r_p, q.q, in.epsilon_reg);
    EXPECT_NEAR(gd.gamma, 2.0, 1e-14);
    EXPECT_NEAR(gd.delta, 2.0, 1e-14);
}

TEST(Identity, GateTieGoesToInterference) {
    const PrecoderInputs in = identity_case();
    const PrecoderSolution s = solve(in);
    EXPECT_NEAR(s.alpha, std::sqrt(2.0), 1e-14);
    EXPECT_EQ(s.binding, Binding::InterferenceLimited);
    EXPECT_NEAR(s.transmit_power, 1.0, 1e-14);
    EXPECT_NEAR(s.interference, 1.0, 1e-14);
    // snr = 2 K rho alpha^2 / (N_t tr(A^T R_S A)) = 4 * 2 / (2 * 8)
    EXPECT_NEAR(s.snr_est, 0.5, 1e-14);
}

TEST(Identity, ScaledSecondaryCorrelation) {
    PrecoderInputs in = identity_case();
    in.r_s *= 2.0;
    const QResult q = compute_q(in.a, in.r_s, in.r_p, in.epsilon_reg);
    EXPECT_NEAR(q.trace, 0.5, 1e-14);
    EXPECT_LT(structure_residual(in.a, in.r_s, solve_w(in, 0.7), 0.7), 1e-14);
}

TEST(Degenerate, ZeroSecondaryCorrelation) {
    PrecoderInputs in = identity_case();
    in.r_s.setZero();
    EXPECT_THROW(solve(in), DegenerateGeometryError);
}

TEST(Degenerate, ZeroInterferenceCorrelation) {
    PrecoderInputs in = identity_case();
    in.r_p.setZero();
    EXPECT_THROW(regularized(in.r_p, 1e-9), DegenerateGeometryError);
    EXPECT_THROW(solve(in), DegenerateGeometryError);
}

TEST(Inputs, Validation) {
    PrecoderInputs in = identity_case();
    EXPECT_NO_THROW(in.validate());
    in.r_p = RealMat::Identity(4, 4);
    EXPECT_THROW(in.validate(), DimensionError);
    in = identity_case();
    in.p_tmax = -1;
    EXPECT_THROW(in.validate(), std::invalid_argument);
}

TEST(Regularized, AddsRelativeLoading) {
    const RealMat r = 4.0 * RealMat::Identity(8, 8);
    EXPECT_LT((regularized(r, 0.25) - 5.0 * RealMat::Identity(8, 8)).norm(), 1e-15);
}

TEST(Gate, BranchIsolation) {
    PrecoderInputs in = random_case(CodeName::C2, 1, 41);
    const PrecoderCore core = analyze(in);
    // A huge cap leaves the power budget binding and vice versa.
    in.p_tmax = 1.0;
    in.eta = 1e12;
    PrecoderSolution s = gate(in, core);
    EXPECT_EQ(s.binding, Binding::PowerLimited);
    EXPECT_NEAR(s.transmit_power, 1.0, 1e-12);
    EXPECT_LT(s.interference, in.eta);
    in.p_tmax = 1e12;
    in.eta = 1.0;
    s = gate(in, core);
    EXPECT_EQ(s.binding, Binding::InterferenceLimited);
    EXPECT_NEAR(s.interference, 1.0, 1e-12);
    EXPECT_LT(s.transmit_power, in.p_tmax);
}

TEST(Gate, ClosedFormsMatchTraces) {
    for (CodeName name : {CodeName::C2, CodeName::C4}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            PrecoderInputs in = random_case(name, 2, 100 + seed);
            in.p_tmax = 0.5 + static_cast<double>(seed);
            in.eta = 2.0;
            const PrecoderSolution s = solve(in);
            const RealMat rp = regularized(in.r_p, in.epsilon_reg);
            EXPECT_NEAR(transmit_power(s.w, in.rho_sr, in.n_tx) / s.transmit_power, 1.0, 1e-10);
            EXPECT_NEAR(interference_power(s.w, rp, in.rho_sr, in.n_tx) / s.interference, 1.0,
                        1e-10);
            EXPECT_NEAR(interference_closed_form(in.rho_sr, s.alpha, s.tr_q, in.kappa, in.n_tx),
                        s.interference, 1e-12 * s.interference);
            EXPECT_NEAR(transmit_closed_form(in.rho_sr, s.alpha, s.delta, in.kappa, in.n_tx),
                        s.transmit_power, 1e-12 * s.transmit_power);
            EXPECT_LT(structure_residual(in.a, in.r_s, s.w, s.alpha), 1e-8);
        }
    }
}

TEST(Snr, LinearInPowerThenFlat) {
    PrecoderInputs in = random_case(CodeName::C2, 1, 43);
    in.eta = 1.0;
    const PrecoderCore core = analyze(in);
    in.p_tmax = 1e-6;
    const double s1 = gate(in, core).snr_est;
    in.p_tmax = 1e-5;
    const double s2 = gate(in, core).snr_est;
    EXPECT_NEAR(s2 / s1, 10.0, 1e-9);
    in.p_tmax = 1e6;
    const double hi1 = gate(in, core).snr_est;
    in.p_tmax = 1e9;
    const double hi2 = gate(in, core).snr_est;
    EXPECT_EQ(hi1, hi2);
    EXPECT_GT(hi1, s2);
}

TEST(Snr, EstimateOverloadsAgree) {
    PrecoderInputs in = random_case(CodeName::C4, 2, 47);
    const PrecoderCore core = analyze(in);
    EXPECT_NEAR(snr_estimate(in, 1.3),
                snr_estimate(in.rho_sr, 1.3, in.n_tx, in.symbols(), core.detector_noise_trace),
                1e-12);
}

TEST(Snr, GammaFormIsScaledDetectorSnrForSingleReceiveAntenna) {
    // Holds for C2 with any R_P, and for C4 when R_P has the channel-model
    // structure I_T (x) G^H G. A generic SPD R_P breaks it for C4.
    const double k2 = 2.0;
    PrecoderInputs in = random_case(CodeName::C2, 1, 53);
    PrecoderSolution s = solve(in);
    EXPECT_NEAR(gamma_snr_form(in.rho_sr, s.alpha, s.gamma, in.n_tx) / (2 * k2 * s.snr_est), 1.0,
                1e-8);

    in = random_case(CodeName::C4, 1, 53);
    std::mt19937_64 rng(54);
    std::normal_distribution<double> n;
    ComplexMat g(2, 4);
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        g(i) = cplx(n(rng), n(rng));
    }
    const RealMat geq = realify_channel(g, 8);
    in.r_p = geq.transpose() * geq + 0.05 * RealMat::Identity(64, 64);
    s = solve(in);
    const double k4 = 4.0;
    EXPECT_NEAR(gamma_snr_form(in.rho_sr, s.alpha, s.gamma, in.n_tx) / (2 * k4 * s.snr_est), 1.0,
                1e-8);
}

TEST(Regularization, TighteningEpsilonIsStable) {
    PrecoderInputs in = random_case(CodeName::C2, 2, 59);
    in.epsilon_reg = 1e-9;
    const PrecoderSolution a = solve(in);
    in.epsilon_reg = 1e-12;
    const PrecoderSolution b = solve(in);
    EXPECT_LT((a.w - b.w).norm() / b.w.norm(), 1e-6);
    EXPECT_NEAR(a.snr_est / b.snr_est, 1.0, 1e-6);
}

TEST(PrintedForm, ViolatesStructure) {
    const PrecoderInputs in = random_case(CodeName::C2, 2, 61);
    const RealMat w = solve_w(in, 1.0, QForm::Printed);
    EXPECT_GT(structure_residual(in.a, in.r_s, w, 1.0), 1e-3);
}

TEST(Modes, IndexOrder) {
    for (std::size_t i = 0; i < kModes.size(); ++i) {
        EXPECT_EQ(mode_index(kModes[i][0], kModes[i][1]), i);
    }
}

TEST(Modes, SelectFirstOnTies) {
    EXPECT_EQ(select_mode(std::array<double, 4>{1, 3, 3, 2}), 1u);
    EXPECT_EQ(select_mode(std::array<double, 4>{5, 5, 5, 5}), 0u);
    EXPECT_EQ(select_mode(std::array<double, 4>{0, 0, 0, 1}), 3u);
}

TEST(Modes, SelectionInvariantToCommonScaling) {
    std::array<PrecoderSolution, 4> sols;
    const std::array<double, 4> snr{0.2, 1.7, 0.9, 1.1};
    for (std::size_t i = 0; i < 4; ++i) {
        sols[i].snr_est = snr[i];
    }
    const std::size_t base = select_mode(sols).chosen;
    EXPECT_EQ(base, 1u);
    for (double scale : {1e-6, 0.5, 3.0, 1e8}) {
        std::array<PrecoderSolution, 4> scaled = sols;
        for (auto& s : scaled) {
            s.snr_est *= scale;
        }
        EXPECT_EQ(select_mode(scaled).chosen, base);
    }
}

TEST(Threshold, EtaFromSinrTarget) {
    EXPECT_NEAR(eta_from_threshold(100.0, 10.0, 1.0), 9.0, 1e-12);
    EXPECT_THROW(eta_from_threshold(1.0, 10.0, 1.0), std::invalid_argument);
}
