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

#include "ostbccr_cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "ostbccr/montecarlo.hpp"
#include "ostbccr_cli/config.hpp"
#include "ostbccr_cli/report.hpp"
#include "ostbccr_cli/verify.hpp"

namespace ostbccr::cli {

namespace fs = std::filesystem;

namespace {

struct Outputs {
    std::string csv;
    std::string svg;
    std::string manifest;
};

// All-or-nothing write of the three output files.
void write_outputs(const fs::path& dir, const Outputs& o) {
    const std::vector<std::pair<fs::path, const std::string*>> files{
        {dir / "result.csv", &o.csv},
        {dir / "snr_vs_power.svg", &o.svg},
        {dir / "run_manifest.txt", &o.manifest}};
    std::vector<fs::path> written;
    try {
        fs::create_directories(dir);
        for (const auto& [path, text] : files) {
            std::ofstream f(path, std::ios::binary | std::ios::trunc);
            written.push_back(path);
            f << *text;
            f.close();
            if (!f) {
                throw std::runtime_error("cannot write '" + path.string() + "'");
            }
        }
    } catch (...) {
        std::error_code ec;
        for (const fs::path& p : written) {
            fs::remove(p, ec);
        }
        throw;
    }
}

std::string manifest_text(const RunManifest& m, const SweepConfig& cfg) {
    std::ostringstream os;
    os << "command: " << m.command << '\n'
       << "config: " << m.config.string() << '\n'
       << "threads: " << cfg.threads << '\n'
       << describe(cfg);
    return os.str();
}

SweepConfig load(const RunManifest& m) {
    if (m.config.empty()) {
        throw ConfigError("--config is required for '" + m.command + "'");
    }
    SweepConfig cfg = parse_config(m.config);
    if (m.seed) {
        cfg.seed = *m.seed;
    }
    if (m.threads > 0) {
        cfg.threads = m.threads;
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

std::string render_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

std::string render_svg(const std::vector<TableRow>& rows, const std::string& title) {
    std::ostringstream os;
    write_svg(os, curves_from_rows(rows), title);
    return os.str();
}

std::string title_for(const SweepConfig& cfg) {
    std::ostringstream os;
    os << to_string(cfg.code) << ", SL " << cfg.sl.n_tx << "x" << cfg.sl.n_rx << " ("
       << cfg.sl.n_paths << " paths), SPL " << cfg.spl.n_paths << " paths, eta "
       << format_number(cfg.eta_db) << " dB, seed " << cfg.seed;
    return os.str();
}

void print_chosen(std::ostream& out, const SweepResult& r) {
    if (r.policy != ModePolicy::SelectBest) {
        return;
    }
    for (const PowerPoint& pt : r.points) {
        std::size_t best = 0;
        for (std::size_t m = 1; m < 4; ++m) {
            if (pt.chosen[m] > pt.chosen[best]) {
                best = m;
            }
        }
        out << "power " << format_number(pt.power_db) << " dB: chosen mode qt="
            << to_string(kModes[best][0]) << " qr=" << to_string(kModes[best][1]) << " (";
        for (std::size_t m = 0; m < 4; ++m) {
            out << (m ? " " : "") << to_string(kModes[m][0]) << to_string(kModes[m][1]) << '='
                << pt.chosen[m];
        }
        out << ")\n";
    }
}

int guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DegenerateGeometryError& e) {
        err << "numerical abort: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

int sweep_like(const RunManifest& m, std::ostream& out, std::ostream& err, bool with_ber) {
    return guarded(
        [&] {
            SweepConfig cfg = load(m);
            cfg.with_ber = with_ber;
            const SweepResult r = run_sweep(cfg);
            const std::vector<TableRow> rows = summarize(r);
            write_outputs(m.out_dir, {render_csv(rows), render_svg(rows, title_for(cfg)),
                                      manifest_text(m, cfg)});
            out << "seed " << cfg.seed << ": " << r.instances << " instances, " << r.degenerate
                << " degenerate\n";
            print_chosen(out, r);
            out << "wrote " << (m.out_dir / "result.csv").string() << '\n';
            return static_cast<int>(kExitOk);
        },
        err);
}

} // namespace

int threads_from_env() {
    const char* v = std::getenv("PRECODER_THREADS");
    if (v == nullptr) {
        return 0;
    }
    try {
        const int n = std::stoi(v);
        return n > 0 ? n : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

int cmd_sweep(const RunManifest& m, std::ostream& out, std::ostream& err) {
    return sweep_like(m, out, err, false);
}

int cmd_ber(const RunManifest& m, std::ostream& out, std::ostream& err) {
    return sweep_like(m, out, err, true);
}

int cmd_compare_modes(const RunManifest& m, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const SweepConfig cfg = load(m);
            const ModeComparison cmp = compare_modes(cfg);
            const std::vector<TableRow> rows = summarize(cmp);
            write_outputs(m.out_dir, {render_csv(rows), render_svg(rows, title_for(cfg)),
                                      manifest_text(m, cfg)});
            out << "seed " << cfg.seed << '\n';
            for (std::size_t i = 0; i < 4; ++i) {
                if (!cmp.modes[i]) {
                    out << "mode qt=" << to_string(kModes[i][0]) << " qr="
                        << to_string(kModes[i][1]) << ": -inf dB (" << cmp.failure[i] << ")\n";
                }
            }
            for (std::size_t p = 0; p < cfg.power_db.size(); ++p) {
                out << "power " << format_number(cfg.power_db[p])
                    << " dB: matched-mismatched gap " << format_number(cmp.gap_db[p]) << " dB\n";
            }
            out << "wrote " << (m.out_dir / "result.csv").string() << '\n';
            return static_cast<int>(kExitOk);
        },
        err);
}

int cmd_verify(const RunManifest& m, std::ostream& out, std::ostream& err) {
    return guarded(
        [&] {
            const std::uint64_t seed = m.seed.value_or(1);
            const VerifyReport report = run_verify(seed, m.q_form);
            print_report(out, report, seed);
            if (!m.out_dir.empty()) {
                fs::create_directories(m.out_dir);
                std::ofstream f(m.out_dir / "verify_report.txt");
                print_report(f, report, seed);
            }
            return static_cast<int>(report.all_pass() ? kExitOk : kExitInvariant);
        },
        err);
}

int run_command(const RunManifest& m, std::ostream& out, std::ostream& err) {
    if (m.command == "sweep") {
        return cmd_sweep(m, out, err);
    }
    if (m.command == "compare-modes") {
        return cmd_compare_modes(m, out, err);
    }
    if (m.command == "ber") {
        return cmd_ber(m, out, err);
    }
    if (m.command == "verify") {
        return cmd_verify(m, out, err);
    }
    err << "unknown command '" << m.command << "' (sweep, compare-modes, ber, verify)\n";
    return kExitConfig;
}

} // namespace ostbccr::cli
