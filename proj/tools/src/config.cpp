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

#include "ostbccr_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

namespace ostbccr::cli {

namespace {

void reject_unknown(const YAML::Node& node, const std::set<std::string>& known,
                    const std::string& prefix) {
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (!known.contains(key)) {
            throw ConfigError("unknown key '" + prefix + key + "'");
        }
    }
}

template <typename T>
T get(const YAML::Node& node, const std::string& key, const std::string& prefix) {
    try {
        return node[key].as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError("invalid value for '" + prefix + key + "'");
    }
}

double get_real(const YAML::Node& node, const std::string& key, const std::string& prefix) {
    const auto text = get<std::string>(node, key, prefix);
    if (text == "inf" || text == ".inf" || text == "+inf") {
        return std::numeric_limits<double>::infinity();
    }
    const double v = get<double>(node, key, prefix);
    if (std::isnan(v)) {
        throw ConfigError("invalid value for '" + prefix + key + "'");
    }
    return v;
}

int get_count(const YAML::Node& node, const std::string& key, const std::string& prefix) {
    const int v = get<int>(node, key, prefix);
    if (v < 1) {
        throw ConfigError("'" + prefix + key + "' must be >= 1");
    }
    return v;
}

void read_link(const YAML::Node& node, const std::string& name, LinkConfig& link) {
    if (!node) {
        return;
    }
    if (!node.IsMap()) {
        throw ConfigError("'" + name + "' must be a table");
    }
    const std::string prefix = name + ".";
    reject_unknown(node, {"n_tx", "n_rx", "n_paths", "xpd_db", "spacing"}, prefix);
    if (node["n_tx"]) {
        link.n_tx = get_count(node, "n_tx", prefix);
    }
    if (node["n_rx"]) {
        link.n_rx = get_count(node, "n_rx", prefix);
    }
    if (node["n_paths"]) {
        link.n_paths = get_count(node, "n_paths", prefix);
    }
    if (node["xpd_db"]) {
        link.xpd_db = get_real(node, "xpd_db", prefix);
        if (std::isinf(link.xpd_db) && link.xpd_db < 0) {
            throw ConfigError("'" + prefix + "xpd_db' must not be -inf");
        }
    }
    if (node["spacing"]) {
        link.spacing = get_real(node, "spacing", prefix);
        if (!(link.spacing > 0) || !std::isfinite(link.spacing)) {
            throw ConfigError("'" + prefix + "spacing' must be positive");
        }
    }
}

std::vector<double> read_power_grid(const YAML::Node& node) {
    std::vector<double> grid;
    if (node.IsSequence()) {
        for (const auto& v : node) {
            try {
                grid.push_back(v.as<double>());
            } catch (const YAML::Exception&) {
                throw ConfigError("invalid value for 'power_db'");
            }
        }
    } else if (node.IsMap()) {
        reject_unknown(node, {"start", "stop", "step"}, "power_db.");
        for (const char* k : {"start", "stop", "step"}) {
            if (!node[k]) {
                throw ConfigError(std::string("missing key 'power_db.") + k + "'");
            }
        }
        const double start = get_real(node, "start", "power_db.");
        const double stop = get_real(node, "stop", "power_db.");
        const double step = get_real(node, "step", "power_db.");
        if (!(step > 0)) {
            throw ConfigError("'power_db.step' must be positive");
        }
        for (int i = 0; start + i * step <= stop + 1e-9 * step; ++i) {
            grid.push_back(start + i * step);
        }
    } else {
        throw ConfigError("'power_db' must be a list or a {start, stop, step} table");
    }
    if (grid.empty()) {
        throw ConfigError("'power_db' is empty");
    }
    for (double p : grid) {
        if (!std::isfinite(p)) {
            throw ConfigError("'power_db' contains a non-finite value");
        }
    }
    return grid;
}

} // namespace

SweepConfig parse_config_text(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if (!root.IsMap()) {
        throw ConfigError("malformed config: top level must be a table");
    }
    reject_unknown(root,
                   {"code", "power_db", "eta_db", "eta_threshold", "n_tilt", "n_channel",
                    "n_noise", "n_corr_samples", "seed", "mode", "pr_mode", "rho_sr_db",
                    "epsilon_reg", "averaging", "average_sl_correlation", "threads", "sl",
                    "spl"},
                   "");

    SweepConfig cfg;
    if (root["code"]) {
        try {
            cfg.code = parse_code_name(get<std::string>(root, "code", ""));
        } catch (const std::invalid_argument&) {
            throw ConfigError("invalid value for 'code' (expected C2 or C4)");
        }
    }
    const int n_tx = build_code(cfg.code).n_tx;
    cfg.sl.n_tx = n_tx;
    cfg.spl.n_tx = n_tx;
    cfg.sl.n_paths = 2;
    cfg.spl.n_rx = 2;

    if (!root["power_db"]) {
        throw ConfigError("missing key 'power_db'");
    }
    cfg.power_db = read_power_grid(root["power_db"]);

    if (root["eta_db"] && root["eta_threshold"]) {
        throw ConfigError("'eta_db' and 'eta_threshold' are mutually exclusive");
    }
    if (root["eta_db"]) {
        cfg.eta_db = get_real(root, "eta_db", "");
        if (!std::isfinite(cfg.eta_db)) {
            throw ConfigError("'eta_db' must be finite");
        }
    } else if (root["eta_threshold"]) {
        const YAML::Node t = root["eta_threshold"];
        const std::string prefix = "eta_threshold.";
        reject_unknown(t, {"primary_rx_power_db", "sinr_threshold_db", "pr_noise_db"}, prefix);
        for (const char* k : {"primary_rx_power_db", "sinr_threshold_db", "pr_noise_db"}) {
            if (!t[k]) {
                throw ConfigError("missing key '" + prefix + k + "'");
            }
        }
        try {
            cfg.eta_db = to_db(eta_from_threshold(
                from_db(get_real(t, "primary_rx_power_db", prefix)),
                from_db(get_real(t, "sinr_threshold_db", prefix)),
                from_db(get_real(t, "pr_noise_db", prefix))));
        } catch (const std::invalid_argument& e) {
            throw ConfigError("invalid 'eta_threshold': " + std::string(e.what()));
        }
    } else {
        throw ConfigError("missing key 'eta_db' (the interference cap has no default)");
    }

    if (root["n_tilt"]) cfg.n_tilt = get_count(root, "n_tilt", "");
    if (root["n_channel"]) cfg.n_channel = get_count(root, "n_channel", "");
    if (root["n_noise"]) cfg.n_noise = get_count(root, "n_noise", "");
    if (root["n_corr_samples"]) cfg.n_corr_samples = get_count(root, "n_corr_samples", "");
    if (root["seed"]) cfg.seed = get<std::uint64_t>(root, "seed", "");
    if (root["threads"]) {
        cfg.threads = get<int>(root, "threads", "");
        if (cfg.threads < 0) {
            throw ConfigError("'threads' must be >= 0");
        }
    }
    if (root["mode"]) {
        const auto mode = get<std::string>(root, "mode", "");
        if (mode == "best") {
            cfg.policy = ModePolicy::SelectBest;
        } else if (mode.size() == 2 && (mode[0] == 'V' || mode[0] == 'H') &&
                   (mode[1] == 'V' || mode[1] == 'H')) {
            cfg.policy = ModePolicy::Fixed;
            cfg.fixed_qt = parse_polarization(mode.substr(0, 1));
            cfg.fixed_qr = parse_polarization(mode.substr(1, 1));
        } else {
            throw ConfigError("invalid value for 'mode' (expected best, VV, VH, HV or HH)");
        }
    }
    if (root["pr_mode"]) {
        try {
            cfg.pr_mode = parse_polarization(get<std::string>(root, "pr_mode", ""));
        } catch (const std::invalid_argument&) {
            throw ConfigError("invalid value for 'pr_mode' (expected V or H)");
        }
    }
    if (root["rho_sr_db"]) {
        const double rho = get_real(root, "rho_sr_db", "");
        if (!std::isfinite(rho)) {
            throw ConfigError("'rho_sr_db' must be finite");
        }
        cfg.rho_sr = from_db(rho);
    }
    if (root["epsilon_reg"]) {
        cfg.epsilon_reg = get_real(root, "epsilon_reg", "");
        if (!(cfg.epsilon_reg >= 0) || !std::isfinite(cfg.epsilon_reg)) {
            throw ConfigError("'epsilon_reg' must be >= 0");
        }
    }
    if (root["averaging"]) {
        const auto avg = get<std::string>(root, "averaging", "");
        if (avg == "linear") {
            cfg.averaging = Averaging::Linear;
        } else if (avg == "db") {
            cfg.averaging = Averaging::Db;
        } else {
            throw ConfigError("invalid value for 'averaging' (expected linear or db)");
        }
    }
    if (root["average_sl_correlation"]) {
        cfg.average_sl_correlation = get<bool>(root, "average_sl_correlation", "");
    }

    read_link(root["sl"], "sl", cfg.sl);
    read_link(root["spl"], "spl", cfg.spl);
    if (cfg.sl.n_tx != n_tx) {
        throw ConfigError("'sl.n_tx' must equal the code's N_t = " + std::to_string(n_tx));
    }
    if (cfg.spl.n_tx != n_tx) {
        throw ConfigError("'spl.n_tx' must equal the code's N_t = " + std::to_string(n_tx));
    }
    return cfg;
}

SweepConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string describe(const SweepConfig& cfg) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    auto link = [&](const char* name, const LinkConfig& l) {
        os << name << ".n_tx: " << l.n_tx << '\n'
           << name << ".n_rx: " << l.n_rx << '\n'
           << name << ".n_paths: " << l.n_paths << '\n'
           << name << ".xpd_db: " << l.xpd_db << '\n'
           << name << ".spacing: " << l.spacing << '\n';
    };
    os << "code: " << to_string(cfg.code) << '\n';
    os << "power_db:";
    for (double p : cfg.power_db) {
        os << ' ' << p;
    }
    os << '\n';
    os << "eta_db: " << cfg.eta_db << '\n'
       << "n_tilt: " << cfg.n_tilt << '\n'
       << "n_channel: " << cfg.n_channel << '\n'
       << "n_noise: " << cfg.n_noise << '\n'
       << "n_corr_samples: " << cfg.n_corr_samples << '\n'
       << "seed: " << cfg.seed << '\n'
       << "mode: "
       << (cfg.policy == ModePolicy::SelectBest
               ? std::string("best")
               : std::string(to_string(cfg.fixed_qt)) + std::string(to_string(cfg.fixed_qr)))
       << '\n'
       << "pr_mode: " << to_string(cfg.pr_mode) << '\n'
       << "rho_sr_db: " << to_db(cfg.rho_sr) << '\n'
       << "epsilon_reg: " << cfg.epsilon_reg << '\n'
       << "averaging: " << (cfg.averaging == Averaging::Linear ? "linear" : "db") << '\n'
       << "average_sl_correlation: " << (cfg.average_sl_correlation ? "true" : "false")
       << '\n';
    link("sl", cfg.sl);
    link("spl", cfg.spl);
    return os.str();
}

} // namespace ostbccr::cli
