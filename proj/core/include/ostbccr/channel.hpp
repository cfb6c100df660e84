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

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "ostbccr/types.hpp"

namespace ostbccr {

/// Simplified dual-polarized multipath channel. Each path carries a 2x2
/// polarization matrix (co-pol unit variance, cross-pol 1/XPD), a departure
/// and an arrival angle seen by uniform linear arrays, and an equal share of
/// the link power. There is no delay spread and no Doppler: one flat-fading
/// snapshot per realization.

enum class Polarization { V, H };

Polarization parse_polarization(std::string_view s);
std::string_view to_string(Polarization p);

using Rng = std::mt19937_64;

/// Independent generator for (master seed, instance, stream tag). Used to
/// give every link of every Monte-Carlo instance its own stream, so results
/// do not depend on evaluation order or worker count.
Rng make_stream(std::uint64_t seed, std::uint64_t instance, std::uint64_t tag);

struct LinkConfig {
    int n_tx{2};
    int n_rx{1};
    int n_paths{1};
    double xpd_db{8.0};  // +inf disables cross-polar coupling
    double spacing{0.5}; // element spacing in wavelengths
    std::uint64_t seed{1};

    double cross_pol_power() const;
    void validate() const;
};

struct Path {
    // Rows: receive polarization (V, H); columns: transmit polarization.
    Eigen::Matrix2cd gains{Eigen::Matrix2cd::Zero()};
    double aod{0.0};
    double aoa{0.0};
    double power{1.0};
};

struct PathSet {
    std::vector<Path> paths;
};

struct ChannelRealization {
    ComplexMat h;
    Polarization tx{Polarization::V};
    Polarization rx{Polarization::V};
    double tilt{0.0};
};

PathSet draw_paths(const LinkConfig& cfg, Rng& rng);

/// Redraws the polarization gains of every path, keeping angles and powers.
void redraw_gains(PathSet& paths, const LinkConfig& cfg, Rng& rng);

/// Receive polarization projection: Rot(tilt) applied to the unit vector of
/// the nominal receive mode.
Eigen::Vector2d receive_projection(Polarization rx, double tilt);

ChannelRealization realize(const PathSet& paths, Polarization qt, Polarization qr, double tilt,
                           const LinkConfig& cfg);

/// Channel for an arbitrary real receive projection vector (weights for V, H).
ComplexMat realize_projected(const PathSet& paths, Polarization qt,
                             const Eigen::Vector2d& receive, const LinkConfig& cfg);

RealMat equivalent(const ChannelRealization& h, int blocks);

/// Sample mean of Heq^T Heq over n_samples draws of the sampler, symmetrized.
/// Heq^T Heq is the real representation of I_T (x) H^H H, which is what is
/// accumulated.
RealMat correlation(const std::function<ComplexMat()>& sampler, int blocks, int n_samples);

/// Transmit correlation of one link geometry for a fixed transmit mode, as a
/// function of the receiver's tilt. The fading gains are redrawn n_samples
/// times from the given geometry; the Gram matrices of the V- and H-projected
/// channels are kept separately so that any tilt can be evaluated from the
/// same draws.
class TiltCorrelation {
public:
    TiltCorrelation(const PathSet& geometry, const LinkConfig& cfg, Polarization qt, int blocks,
                    int n_samples, Rng& rng);

    RealMat at(Polarization rx, double tilt) const;

private:
    int blocks_;
    ComplexMat gram_vv_;
    ComplexMat gram_hh_;
    ComplexMat gram_vh_;
};

/// Convenience: TiltCorrelation(...).at(qr, tilt).
RealMat correlation(const PathSet& geometry, const LinkConfig& cfg, Polarization qt,
                    Polarization qr, double tilt, int blocks, int n_samples, Rng& rng);

/// Midpoint grid over [0, pi/2): (j + 0.5) * (pi/2) / n.
std::vector<double> tilt_samples(int n_tilt);

} // namespace ostbccr
