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

#include "ostbccr/channel.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ostbccr/realify.hpp"

namespace ostbccr {

namespace {

cplx circular_normal(Rng& rng, double variance) {
    std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

cplx ula_phase(double spacing, int index, double angle) {
    const double phi = 2.0 * std::numbers::pi * spacing * index * std::sin(angle);
    return std::polar(1.0, phi);
}

} // namespace

Polarization parse_polarization(std::string_view s) {
    if (s == "V" || s == "v") {
        return Polarization::V;
    }
    if (s == "H" || s == "h") {
        return Polarization::H;
    }
    throw std::invalid_argument("unknown polarization '" + std::string(s) + "' (expected V or H)");
}

std::string_view to_string(Polarization p) {
    return p == Polarization::V ? "V" : "H";
}

Rng make_stream(std::uint64_t seed, std::uint64_t instance, std::uint64_t tag) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(instance),
                      static_cast<std::uint32_t>(instance >> 32), static_cast<std::uint32_t>(tag),
                      static_cast<std::uint32_t>(tag >> 32)};
    return Rng(seq);
}

double LinkConfig::cross_pol_power() const {
    if (std::isinf(xpd_db) && xpd_db > 0) {
        return 0.0;
    }
    return std::pow(10.0, -xpd_db / 10.0);
}

void LinkConfig::validate() const {
    if (n_tx < 1 || n_rx < 1 || n_paths < 1) {
        throw std::invalid_argument("link config: antenna and path counts must be >= 1");
    }
    if (std::isnan(xpd_db) || (std::isinf(xpd_db) && xpd_db < 0)) {
        throw std::invalid_argument("link config: xpd_db must be a number or +inf");
    }
    if (!std::isfinite(spacing) || spacing <= 0.0) {
        throw std::invalid_argument("link config: element spacing must be positive");
    }
}

PathSet draw_paths(const LinkConfig& cfg, Rng& rng) {
    cfg.validate();
    PathSet set;
    set.paths.resize(static_cast<std::size_t>(cfg.n_paths));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (Path& p : set.paths) {
        p.aod = angle(rng);
        p.aoa = angle(rng);
        p.power = 1.0 / cfg.n_paths;
    }
    redraw_gains(set, cfg, rng);
    return set;
}

void redraw_gains(PathSet& paths, const LinkConfig& cfg, Rng& rng) {
    const double cross = cfg.cross_pol_power();
    for (Path& p : paths.paths) {
        p.gains(0, 0) = circular_normal(rng, 1.0);
        p.gains(0, 1) = circular_normal(rng, 1.0);
        p.gains(1, 0) = circular_normal(rng, 1.0);
        p.gains(1, 1) = circular_normal(rng, 1.0);
        // Cross terms drawn at unit variance then scaled, so the stream
        // consumption does not depend on the XPD.
        p.gains(0, 1) *= std::sqrt(cross);
        p.gains(1, 0) *= std::sqrt(cross);
    }
}

Eigen::Vector2d receive_projection(Polarization rx, double tilt) {
    const double c = std::cos(tilt);
    const double s = std::sin(tilt);
    // Rot(tilt) * e_V = (c, s), Rot(tilt) * e_H = (-s, c)
    if (rx == Polarization::V) {
        return {c, s};
    }
    return {-s, c};
}

ComplexMat realize_projected(const PathSet& paths, Polarization qt,
                             const Eigen::Vector2d& receive, const LinkConfig& cfg) {
    const int col = qt == Polarization::V ? 0 : 1;
    ComplexMat h = ComplexMat::Zero(cfg.n_rx, cfg.n_tx);
    for (const Path& p : paths.paths) {
        const cplx g = std::sqrt(p.power) *
                       (receive(0) * p.gains(0, col) + receive(1) * p.gains(1, col));
        for (int u = 0; u < cfg.n_rx; ++u) {
            const cplx ar = g * ula_phase(cfg.spacing, u, p.aoa);
            for (int s = 0; s < cfg.n_tx; ++s) {
                h(u, s) += ar * ula_phase(cfg.spacing, s, p.aod);
            }
        }
    }
    return h;
}

ChannelRealization realize(const PathSet& paths, Polarization qt, Polarization qr, double tilt,
                           const LinkConfig& cfg) {
    return {realize_projected(paths, qt, receive_projection(qr, tilt), cfg), qt, qr, tilt};
}

RealMat equivalent(const ChannelRealization& h, int blocks) {
    return realify_channel(h.h, blocks);
}

RealMat correlation(const std::function<ComplexMat()>& sampler, int blocks, int n_samples) {
    if (n_samples < 1) {
        throw std::invalid_argument("correlation: n_samples must be >= 1");
    }
    ComplexMat gram;
    for (int i = 0; i < n_samples; ++i) {
        const ComplexMat h = sampler();
        if (i == 0) {
            gram = ComplexMat::Zero(h.cols(), h.cols());
        }
        gram.noalias() += h.adjoint() * h;
    }
    gram /= static_cast<double>(n_samples);
    RealMat r = realify_channel(gram, blocks);
    return 0.5 * (r + r.transpose());
}

TiltCorrelation::TiltCorrelation(const PathSet& geometry, const LinkConfig& cfg, Polarization qt,
                                 int blocks, int n_samples, Rng& rng)
    : blocks_(blocks) {
    if (n_samples < 1) {
        throw std::invalid_argument("correlation: n_samples must be >= 1");
    }
    PathSet paths = geometry;
    gram_vv_ = ComplexMat::Zero(cfg.n_tx, cfg.n_tx);
    gram_hh_ = ComplexMat::Zero(cfg.n_tx, cfg.n_tx);
    gram_vh_ = ComplexMat::Zero(cfg.n_tx, cfg.n_tx);
    for (int i = 0; i < n_samples; ++i) {
        redraw_gains(paths, cfg, rng);
        const ComplexMat hv = realize_projected(paths, qt, {1.0, 0.0}, cfg);
        const ComplexMat hh = realize_projected(paths, qt, {0.0, 1.0}, cfg);
        gram_vv_.noalias() += hv.adjoint() * hv;
        gram_hh_.noalias() += hh.adjoint() * hh;
        gram_vh_.noalias() += hv.adjoint() * hh;
    }
    const double inv = 1.0 / n_samples;
    gram_vv_ *= inv;
    gram_hh_ *= inv;
    gram_vh_ *= inv;
}

RealMat TiltCorrelation::at(Polarization rx, double tilt) const {
    // H = a H_V + b H_H  =>  H^H H = a^2 G_vv + b^2 G_hh + ab (G_vh + G_vh^H)
    const Eigen::Vector2d e = receive_projection(rx, tilt);
    const ComplexMat gram = e(0) * e(0) * gram_vv_ + e(1) * e(1) * gram_hh_ +
                            e(0) * e(1) * (gram_vh_ + gram_vh_.adjoint());
    RealMat r = realify_channel(gram, blocks_);
    return 0.5 * (r + r.transpose());
}

RealMat correlation(const PathSet& geometry, const LinkConfig& cfg, Polarization qt,
                    Polarization qr, double tilt, int blocks, int n_samples, Rng& rng) {
    return TiltCorrelation(geometry, cfg, qt, blocks, n_samples, rng).at(qr, tilt);
}

std::vector<double> tilt_samples(int n_tilt) {
    if (n_tilt < 1) {
        throw std::invalid_argument("tilt_samples: n_tilt must be >= 1");
    }
    std::vector<double> out(static_cast<std::size_t>(n_tilt));
    const double step = (std::numbers::pi / 2.0) / n_tilt;
    for (int j = 0; j < n_tilt; ++j) {
        out[j] = (j + 0.5) * step;
    }
    return out;
}

} // namespace ostbccr
