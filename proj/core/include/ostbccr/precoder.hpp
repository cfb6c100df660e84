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
#include <cstddef>

#include "ostbccr/channel.hpp"
#include "ostbccr/types.hpp"

namespace ostbccr {

/// Minimum-variance OSTBC precoder.
///
/// For a secondary link with correlation R_S = Heq^T Heq and an
/// interference-link correlation R_P, the precoder W minimizes the
/// interference tr(W^T R_P W) subject to the OSTBC structure constraint
///
///   A^T R_S W A = alpha * I_2K.
///
/// The Lagrangian stationarity condition gives the closed form
///
///   W = (alpha / kappa) R_P^{-1} R_S A Q A^T,
///   Q = (A^T R_S R_P^{-1} R_S A)^{-1},
///
/// after which transmit power and interference are both alpha^2 times a
/// scalar (delta, tr Q), and alpha is gated by whichever of the power budget
/// and the interference cap binds first. kappa = A^T A / I is carried
/// explicitly so half-rate codes (kappa = 2 N_t) are handled.

enum class Binding { PowerLimited, InterferenceLimited };

/// Which Q to use. Printed omits the second R_S factor; it does not satisfy
/// the structure constraint and exists only as a negative control.
enum class QForm { Corrected, Printed };

struct PrecoderInputs {
    RealMat a;       // dispersion matrix, 2 N_t T x 2K
    double kappa{0}; // A^T A = kappa I
    RealMat r_s;     // secondary-link correlation
    RealMat r_p;     // interference-link correlation
    double rho_sr{1.0};
    double p_tmax{1.0};
    double eta{1.0};
    int n_tx{2};
    double epsilon_reg{1e-9};

    Eigen::Index symbols() const { return a.cols() / 2; }
    void validate() const;
};

/// R_P + eps * (tr R_P / dim) * I. Throws DegenerateGeometryError when
/// tr R_P is not positive.
RealMat regularized(const RealMat& r_p, double epsilon_reg);

struct QResult {
    RealMat q;
    double trace{0};
};

QResult compute_q(const RealMat& a, const RealMat& r_s, const RealMat& r_p, double epsilon_reg,
                  QForm form = QForm::Corrected);

RealMat solve_w(const PrecoderInputs& in, double alpha, QForm form = QForm::Corrected);

/// (rho / N_t) tr(W^T R W). Pass the regularized R_P to get the quantity the
/// precoder caps.
double interference_power(const RealMat& w, const RealMat& r_p, double rho_sr, int n_tx);

/// (rho / N_t) tr(W^T W).
double transmit_power(const RealMat& w, double rho_sr, int n_tx);

struct GammaDelta {
    double gamma{0};
    double delta{0};
};

/// gamma = tr(Q A^T (R_S Rp^-1)^2 R_S A Q), delta = tr(Q A^T R_S Rp^-2 R_S A Q)
/// with Rp the regularized interference correlation.
GammaDelta gamma_delta(const RealMat& a, const RealMat& r_s, const RealMat& r_p,
                       const RealMat& q, double epsilon_reg);

/// Closed forms for the solved W (no W needed):
///   interference = rho alpha^2 tr Q / (N_t kappa)
///   transmit     = rho alpha^2 delta / (N_t kappa)
double interference_closed_form(double rho_sr, double alpha, double tr_q, double kappa, int n_tx);
double transmit_closed_form(double rho_sr, double alpha, double delta, double kappa, int n_tx);

struct Gate {
    double alpha{0};
    Binding binding{Binding::PowerLimited};
};

/// alpha = min(sqrt(kappa N_t P_tmax / (rho delta)), sqrt(kappa N_t eta / (rho tr Q))).
/// Ties go to InterferenceLimited.
Gate gate_alpha(const PrecoderInputs& in, double tr_q, double delta);

/// Post-detection SNR of the soft detector A^T Heq^T y under unit-variance
/// complex noise: (rho / N_t) alpha^2 K / ((1/2) tr(A^T R_S A)).
double snr_estimate(const PrecoderInputs& in, double alpha);
double snr_estimate(double rho_sr, double alpha, int n_tx, Eigen::Index symbols,
                    double detector_noise_trace);

/// Trace-form figure rho alpha^2 gamma / N_t, reported for comparison with
/// snr_estimate(). It is not the detector's SNR.
double gamma_snr_form(double rho_sr, double alpha, double gamma, int n_tx);

/// Power-independent part of a precoder instance: everything except alpha.
struct PrecoderCore {
    RealMat q;
    double tr_q{0};
    double gamma{0};
    double delta{0};
    double detector_noise_trace{0}; // tr(A^T R_S A)
};

PrecoderCore analyze(const PrecoderInputs& in, QForm form = QForm::Corrected);

struct PrecoderSolution {
    RealMat w;
    double alpha{0};
    double tr_q{0};
    double gamma{0};
    double delta{0};
    double snr_est{0};
    double transmit_power{0}; // closed form
    double interference{0};   // closed form, against the regularized R_P
    Binding binding{Binding::PowerLimited};
};

PrecoderSolution solve(const PrecoderInputs& in, QForm form = QForm::Corrected);

/// Solution scalars for a given power budget without forming W.
PrecoderSolution gate(const PrecoderInputs& in, const PrecoderCore& core);

/// Secondary-link polarization modes in tie-break order.
inline constexpr std::array<std::array<Polarization, 2>, 4> kModes{{
    {Polarization::V, Polarization::V},
    {Polarization::V, Polarization::H},
    {Polarization::H, Polarization::V},
    {Polarization::H, Polarization::H},
}};

std::size_t mode_index(Polarization qt, Polarization qr);

struct ModeSelection {
    std::array<PrecoderSolution, 4> solutions;
    std::size_t chosen{0}; // index into kModes
};

/// Argmax of snr_est; the first of kModes wins ties.
std::size_t select_mode(const std::array<double, 4>& snr);
ModeSelection select_mode(std::array<PrecoderSolution, 4> solutions);

/// Dense KKT solve of min tr(W^T Rp W) s.t. A^T R_S W A = alpha I over vec(W).
/// Independent of the closed form; intended for verification at C2 sizes.
RealMat oracle_solve(const PrecoderInputs& in, double alpha);

/// tr(W^T R W).
double quadratic_objective(const RealMat& w, const RealMat& r);

/// ||A^T R_S W A - alpha I||_F / (alpha sqrt(2K)).
double structure_residual(const RealMat& a, const RealMat& r_s, const RealMat& w, double alpha);

/// Interference cap from a threshold-style description of the primary
/// receiver: eta = P_rx / SINR_threshold - P_noise (all linear).
double eta_from_threshold(double primary_rx_power, double sinr_threshold, double pr_noise_power);

} // namespace ostbccr
