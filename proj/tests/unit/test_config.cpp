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

#include "ostbccr_cli/config.hpp"

using namespace ostbccr;
using namespace ostbccr::cli;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_config_text(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Config, MinimalTakesDefaults) {
    const SweepConfig cfg = parse_config_text("power_db: [0, 10]\neta_db: -3\n");
    EXPECT_EQ(cfg.code, CodeName::C2);
    EXPECT_EQ(cfg.power_db, (std::vector<double>{0, 10}));
    EXPECT_EQ(cfg.eta_db, -3);
    EXPECT_EQ(cfg.n_tilt, 16);
    EXPECT_EQ(cfg.n_channel, 200);
    EXPECT_EQ(cfg.n_noise, 10000);
    EXPECT_EQ(cfg.seed, 1u);
    EXPECT_EQ(cfg.policy, ModePolicy::SelectBest);
    EXPECT_EQ(cfg.averaging, Averaging::Linear);
    EXPECT_EQ(cfg.sl.n_tx, 2);
    EXPECT_EQ(cfg.sl.n_rx, 1);
    EXPECT_EQ(cfg.sl.n_paths, 2);
    EXPECT_EQ(cfg.spl.n_rx, 2);
    EXPECT_EQ(cfg.sl.xpd_db, 8);
    EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, CodeSetsTransmitCount) {
    const SweepConfig cfg = parse_config_text("code: C4\npower_db: [0]\neta_db: 0\n");
    EXPECT_EQ(cfg.sl.n_tx, 4);
    EXPECT_EQ(cfg.spl.n_tx, 4);
    EXPECT_NE(error_of("code: C4\npower_db: [0]\neta_db: 0\nsl: {n_tx: 2}\n"), "");
}

TEST(Config, RangeGrid) {
    const SweepConfig cfg =
        parse_config_text("power_db: {start: -10, stop: 10, step: 5}\neta_db: 0\n");
    EXPECT_EQ(cfg.power_db, (std::vector<double>{-10, -5, 0, 5, 10}));
}

TEST(Config, FullKeys) {
    const SweepConfig cfg = parse_config_text(R"(
code: C2
power_db: [1]
eta_threshold: {primary_rx_power_db: 20, sinr_threshold_db: 10, pr_noise_db: 0}
mode: HV
pr_mode: H
rho_sr_db: 3
epsilon_reg: 1e-10
averaging: db
average_sl_correlation: true
threads: 3
seed: 77
sl: {n_rx: 2, n_paths: 3, xpd_db: inf, spacing: 1.0}
)");
    EXPECT_NEAR(from_db(cfg.eta_db), 9.0, 1e-12);
    EXPECT_EQ(cfg.policy, ModePolicy::Fixed);
    EXPECT_EQ(cfg.fixed_qt, Polarization::H);
    EXPECT_EQ(cfg.fixed_qr, Polarization::V);
    EXPECT_EQ(cfg.pr_mode, Polarization::H);
    EXPECT_NEAR(cfg.rho_sr, from_db(3), 1e-12);
    EXPECT_EQ(cfg.epsilon_reg, 1e-10);
    EXPECT_EQ(cfg.averaging, Averaging::Db);
    EXPECT_TRUE(cfg.average_sl_correlation);
    EXPECT_EQ(cfg.threads, 3);
    EXPECT_EQ(cfg.seed, 77u);
    EXPECT_TRUE(std::isinf(cfg.sl.xpd_db));
    EXPECT_EQ(cfg.sl.spacing, 1.0);
}

TEST(Config, UnknownKeyIsNamed) {
    const std::string e = error_of("power_db: [0]\neta_db: 0\nsl: {xpdd_db: 8}\n");
    EXPECT_NE(e.find("unknown key 'sl.xpdd_db'"), std::string::npos) << e;
    EXPECT_NE(error_of("power_db: [0]\neta_db: 0\nbogus: 1\n").find("'bogus'"),
              std::string::npos);
}

TEST(Config, MissingCapIsAnError) {
    const std::string e = error_of("power_db: [0]\n");
    EXPECT_NE(e.find("missing key 'eta_db'"), std::string::npos) << e;
}

TEST(Config, BadGrids) {
    EXPECT_NE(error_of("power_db: []\neta_db: 0\n"), "");
    EXPECT_NE(error_of("power_db: {start: 0, stop: 10, step: 0}\neta_db: 0\n"), "");
    EXPECT_NE(error_of("eta_db: 0\n"), "");
}

TEST(Config, BadValues) {
    EXPECT_NE(error_of("power_db: [0]\neta_db: 0\ncode: C3\n"), "");
    EXPECT_NE(error_of("power_db: [0]\neta_db: 0\nmode: XY\n"), "");
    EXPECT_NE(error_of("power_db: [0]\neta_db: 0\nn_tilt: 0\n"), "");
    EXPECT_NE(error_of("power_db: [0]\neta_db: 0\nn_channel: many\n"), "");
    EXPECT_NE(error_of("power_db: [0\n"), "");
}

TEST(Config, MissingFile) {
    EXPECT_THROW(parse_config("/nonexistent/config.yaml"), ConfigError);
}

TEST(Config, DescribeRoundTripsKeyValues) {
    const SweepConfig cfg = parse_config_text("power_db: [0, 2.5]\neta_db: 1.5\nseed: 9\n");
    const std::string d = describe(cfg);
    EXPECT_NE(d.find("seed: 9"), std::string::npos);
    EXPECT_NE(d.find("power_db: 0 2.5"), std::string::npos);
    EXPECT_NE(d.find("eta_db: 1.5"), std::string::npos);
    EXPECT_NE(d.find("spl.n_paths: 1"), std::string::npos);
}
