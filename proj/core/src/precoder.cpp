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

#include "ostbccr/precoder.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ostbccr {

namespace {

// Smallest admissible eigenvalue of A^T R_S Rp^-1 R_S A relative to its
// largest before the geometry is declared degenerate.
constexpr double kRankTolerance = 1e-14;

void check_square(const RealMat& m, Eigen::Index n, const char* what) {
    if (m.rows() != n || m.cols() != n) {
        throw DimensionError(std::string(what) + " must be " + std::to_string(n) + "x" +
                             std::to_string(n) + ", got " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
}

// Rp^-1 R_S A via Cholesky of the regularized interference correlation.
RealMat whitened_signal(const RealMat& a, const RealMat& r_s, const RealMat& r_p_reg) {
    Eigen::LLT<RealMat> llt(r_p_reg);
    if (llt.info() != Eigen::Success) {
        throw DegenerateGeometryError("interference correlation is not positive definite");
    }
    return llt.solve(r_s * a);
}

} // namespace

void PrecoderInputs::validate() const {
    const Eigen::Index n = a.rows();
    if (a.cols() == 0 || a.cols() % 2 != 0) {
        throw DimensionError("dispersion matrix must have an even, nonzero column count");
    }
    check_square(r_s, n, "R_S");
    check_square(r_p, n, "R_P");
    if (!(kappa > 0) || !(rho_sr > 0) || !(p_tmax > 0) || !(eta > 0) || n_tx < 1) {
        throw std::invalid_argument("precoder inputs: kappa, rho_sr, p_tmax, eta must be > 0");
    }
    if (!(epsilon_reg >= 0)) {
        throw std::invalid_argument("precoder inputs: epsilon_reg must be >= 0");
    }
}

RealMat regularized(const RealMat& r_p, double epsilon_reg) {
    const double tr = r_p.trace();
    if (!(tr > 0) || !std::isfinite(tr)) {
        throw DegenerateGeometryError("interference correlation has zero trace");
    }
    RealMat out = r_p;
    out.diagonal().array() += epsilon_reg * tr / static_cast<double>(r_p.rows());
    return out;
}

QResult compute_q(const RealMat& a, const RealMat& r_s, const RealMat& r_p, double epsilon_reg,
                  QForm form) {
    check_square(r_s, a.rows(), "R_S");
    check_square(r_p, a.rows(), "R_P");
    const RealMat rp = regularized(r_p, epsilon_reg);

    QResult out;
    if (form == QForm::Printed) {
        Eigen::LLT<RealMat> llt(rp);
        if (llt.info() != Eigen::Success) {
            throw DegenerateGeometryError("interference correlation is not positive definite");
        }
        const RealMat inner = a.transpose() * r_s * llt.solve(a);
        Eigen::FullPivLU<RealMat> lu(inner);
        if (!lu.isInvertible()) {
            throw DegenerateGeometryError("A^T R_S Rp^-1 A is singular");
        }
        out.q = lu.inverse();
        out.trace = out.q.trace();
        return out;
    }

    const RealMat x = whitened_signal(a, r_s, rp);
    RealMat inner = (r_s * a).transpose() * x;
    inner = 0.5 * (inner + inner.transpose());
    Eigen::SelfAdjointEigenSolver<RealMat> eig(inner);
    const RealVec& lambda = eig.eigenvalues();
    const double top = lambda.maxCoeff();
    if (!(top > 0) || lambda.minCoeff() <= kRankTolerance * top) {
        throw DegenerateGeometryError(
            "A^T R_S Rp^-1 R_S A is singular (secondary-link channel rank-deficient)");
    }
    out.q = eig.eigenvectors() * lambda.cwiseInverse().asDiagonal() *
            eig.eigenvectors().transpose();
    out.trace = lambda.cwiseInverse().sum();
    return out;
}

RealMat solve_w(const PrecoderInputs& in, double alpha, QForm form) {
    in.validate();
    const QResult q = compute_q(in.a, in.r_s, in.r_p, in.epsilon_reg, form);
    const RealMat x = whitened_signal(in.a, in.r_s, regularized(in.r_p, in.epsilon_reg));
    return (alpha / in.kappa) * x * q.q * in.a.transpose();
}

double interference_power(const RealMat& w, const RealMat& r_p, double rho_sr, int n_tx) {
    return rho_sr / n_tx * quadratic_objective(w, r_p);
}

double transmit_power(const RealMat& w, double rho_sr, int n_tx) {
    return rho_sr / n_tx * w.squaredNorm();
}

GammaDelta gamma_delta(const RealMat& a, const RealMat& r_s, const RealMat& r_p,
                       const RealMat& q, double epsilon_reg) {
    const RealMat x = whitened_signal(a, r_s, regularized(r_p, epsilon_reg));
    const RealMat xq = x * q;
    GammaDelta out;
    out.gamma = (xq.transpose() * r_s * xq).trace();
    out.delta = xq.squaredNorm();
    return out;
}

double interference_closed_form(double rho_sr, double alpha, double tr_q, double kappa,
                                int n_tx) {
    return rho_sr * alpha * alpha * tr_q / (n_tx * kappa);
}

double transmit_closed_form(double rho_sr, double alpha, double delta, double kappa, int n_tx) {
    return rho_sr * alpha * alpha * delta / (n_tx * kappa);
}

Gate gate_alpha(const PrecoderInputs& in, double tr_q, double delta) {
    if (!(tr_q > 0) || !(delta > 0)) {
        throw std::invalid_argument("gate_alpha: tr(Q) and delta must be positive");
    }
    const double power_branch = std::sqrt(in.kappa * in.n_tx * in.p_tmax / (in.rho_sr * delta));
    const double interference_branch =
        std::sqrt(in.kappa * in.n_tx * in.eta / (in.rho_sr * tr_q));
    if (interference_branch <= power_branch) {
        return {interference_branch, Binding::InterferenceLimited};
    }
    return {power_branch, Binding::PowerLimited};
}

double snr_estimate(double rho_sr, double alpha, int n_tx, Eigen::Index symbols,
                    double detector_noise_trace) {
    if (alpha == 0.0) {
        return 0.0;
    }
    const double signal = rho_sr / n_tx * alpha * alpha * static_cast<double>(symbols);
    return signal / (0.5 * detector_noise_trace);
}

double snr_estimate(const PrecoderInputs& in, double alpha) {
    const double noise = (in.a.transpose() * in.r_s * in.a).trace();
    return snr_estimate(in.rho_sr, alpha, in.n_tx, in.symbols(), noise);
}

double gamma_snr_form(double rho_sr, double alpha, double gamma, int n_tx) {
    return rho_sr * alpha * alpha * gamma / n_tx;
}

PrecoderCore analyze(const PrecoderInputs& in, QForm form) {
    in.validate();
    PrecoderCore core;
    QResult q = compute_q(in.a, in.r_s, in.r_p, in.epsilon_reg, form);
    const GammaDelta gd = gamma_delta(in.a, in.r_s, in.r_p, q.q, in.epsilon_reg);
    core.q = std::move(q.q);
    core.tr_q = q.trace;
    core.gamma = gd.gamma;
    core.delta = gd.delta;
    core.detector_noise_trace = (in.a.transpose() * in.r_s * in.a).trace();
    return core;
}

PrecoderSolution gate(const PrecoderInputs& in, const PrecoderCore& core) {
    PrecoderSolution s;
    const Gate g = gate_alpha(in, core.tr_q, core.delta);
    s.alpha = g.alpha;
    s.binding = g.binding;
    s.tr_q = core.tr_q;
    s.gamma = core.gamma;
    s.delta = core.delta;
    s.snr_est = snr_estimate(in.rho_sr, s.alpha, in.n_tx, in.symbols(), core.detector_noise_trace);
    s.transmit_power = transmit_closed_form(in.rho_sr, s.alpha, s.delta, in.kappa, in.n_tx);
    s.interference = interference_closed_form(in.rho_sr, s.alpha, s.tr_q, in.kappa, in.n_tx);
    return s;
}

PrecoderSolution solve(const PrecoderInputs& in, QForm form) {
    const PrecoderCore core = analyze(in, form);
    PrecoderSolution s = gate(in, core);
    const RealMat x = whitened_signal(in.a, in.r_s, regularized(in.r_p, in.epsilon_reg));
    s.w = (s.alpha / in.kappa) * x * core.q * in.a.transpose();
    return s;
}

std::size_t mode_index(Polarization qt, Polarization qr) {
    return (qt == Polarization::V ? 0U : 2U) + (qr == Polarization::V ? 0U : 1U);
}

std::size_t select_mode(const std::array<double, 4>& snr) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < snr.size(); ++i) {
        if (snr[i] > snr[best]) {
            best = i;
        }
    }
    return best;
}

ModeSelection select_mode(std::array<PrecoderSolution, 4> solutions) {
    std::array<double, 4> snr{};
    for (std::size_t i = 0; i < 4; ++i) {
        snr[i] = solutions[i].snr_est;
    }
    ModeSelection out;
    out.chosen = select_mode(snr);
    out.solutions = std::move(solutions);
    return out;
}

double quadratic_objective(const RealMat& w, const RealMat& r) {
    return (w.transpose() * r * w).trace();
}

double structure_residual(const RealMat& a, const RealMat& r_s, const RealMat& w, double alpha) {
    const Eigen::Index m = a.cols();
    const RealMat lhs = a.transpose() * r_s * w * a;
    return (lhs - alpha * RealMat::Identity(m, m)).norm() /
           (alpha * std::sqrt(static_cast<double>(m)));
}

double eta_from_threshold(double primary_rx_power, double sinr_threshold, double pr_noise_power) {
    if (!(primary_rx_power > 0) || !(sinr_threshold > 0) || !(pr_noise_power >= 0)) {
        throw std::invalid_argument("eta_from_threshold: powers must be positive");
    }
    const double eta = primary_rx_power / sinr_threshold - pr_noise_power;
    if (!(eta > 0)) {
        throw std::invalid_argument(
            "eta_from_threshold: primary link already below its SINR threshold");
    }
    return eta;
}

} // namespace ostbccr
