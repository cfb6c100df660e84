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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ostbccr/channel.hpp"
#include "ostbccr/ostbc.hpp"
#include "ostbccr/precoder.hpp"

namespace ostbccr {

enum class ModePolicy { Fixed, SelectBest };
enum class Averaging { Linear, Db };

double to_db(double linear);
double from_db(double db);

struct SweepConfig {
    CodeName code{CodeName::C2};
    LinkConfig sl{};  // ST -> SR
    LinkConfig spl{}; // ST -> PR
    std::vector<double> power_db; // P_maxSU / P_noise, noise power is 1
    double eta_db{0.0};
    int n_tilt{16};
    int n_channel{200};
    int n_noise{10000};
    int n_corr_samples{2000};
    std::uint64_t seed{1};
    ModePolicy policy{ModePolicy::SelectBest};
    Polarization fixed_qt{Polarization::V};
    Polarization fixed_qr{Polarization::V};
    Polarization pr_mode{Polarization::V};
    double rho_sr{1.0};
    double epsilon_reg{1e-9};
    bool average_sl_correlation{false};
    Averaging averaging{Averaging::Linear};
    bool with_ber{false};
    int threads{0}; // 0 = hardware concurrency
    double max_degenerate_fraction{0.01};

    void validate() const;
};

struct PowerPoint {
    double power_db{0};
    double snr_db{0}; // curve of the configured policy
    double frac_interference_limited{0};
    double mean_interference{0}; // linear, against the regularized R_P
    double max_interference{0};
    std::array<double, 4> mode_snr_db{};  // NaN for modes not evaluated
    std::array<double, 4> mode_frac_il{}; // NaN for modes not evaluated
    std::array<double, 4> mode_interference{};
    std::array<std::size_t, 4> chosen{}; // SelectBest: how often each mode won
    std::optional<double> ber;
    std::vector<double> draw_snr; // linear SNR per channel draw, averaged over tilts
};

struct SweepResult {
    std::uint64_t seed{0};
    ModePolicy policy{ModePolicy::SelectBest};
    Polarization fixed_qt{Polarization::V};
    Polarization fixed_qr{Polarization::V};
    double eta{0};
    std::size_t instances{0};
    std::size_t degenerate{0};
    std::vector<PowerPoint> points;
};

/// Average SNR at the secondary receiver over channel draws and receiver tilt
/// samples for each point of the power grid. Throws DegenerateGeometryError
/// when more than max_degenerate_fraction of instances cannot be solved.
SweepResult run_sweep(const SweepConfig& cfg);

struct ModeComparison {
    std::array<std::optional<SweepResult>, 4> modes; // indexed like kModes
    std::array<std::string, 4> failure;              // abort diagnostic per mode
    std::vector<double> gap_db; // mean matched dB - mean mismatched dB; NaN if unavailable
};

ModeComparison compare_modes(const SweepConfig& cfg);

/// One solved link, ready for symbol-level simulation.
struct BerSnapshot {
    RealMat a;
    RealMat heq; // secondary-link equivalent channel
    RealMat w;
    double rho_sr{1.0};
    int n_tx{2};
};

struct BerResult {
    double ber{0};
    std::size_t bit_errors{0};
    std::size_t bits{0};
    double measured_snr{0}; // signal / noise energy at the soft-detector output
};

/// Sends n_blocks random QPSK blocks through
///   y = sqrt(rho / N_t) Heq W A s + noise_scale * n,
/// detects with A^T Heq^T y and slices by sign.
BerResult run_ber(const BerSnapshot& snap, int n_blocks, double noise_scale, Rng& rng);

/// Q function.
double q_function(double x);

/// Theoretical QPSK bit error rate at a given post-detection SNR per symbol.
double qpsk_ber(double snr);

struct TableRow {
    double power_db{0};
    std::string qt;
    std::string qr;
    double snr_db{0};
    double frac_interf_limited{0};
    double interference{0};
    std::optional<double> ber;
};

/// Flat rows: one per power point for a fixed-mode sweep; for SelectBest, a
/// "best" row followed by the four per-mode rows.
std::vector<TableRow> summarize(const SweepResult& result);
std::vector<TableRow> summarize(const ModeComparison& comparison);

} // namespace ostbccr
