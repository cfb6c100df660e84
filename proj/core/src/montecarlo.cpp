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

#include "ostbccr/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ostbccr/realify.hpp"

namespace ostbccr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Stream tags for make_stream().
enum : std::uint64_t {
    kSlPaths = 1,
    kSplPaths = 2,
    kSplCorrelation = 16, // + tx mode
    kSlCorrelation = 32,  // + tx mode
    kBer = 1024,          // + power index
};

struct ModeCore {
    bool ok{false};
    double tr_q{0};
    double delta{0};
    double noise_trace{0};
};

struct DrawData {
    // [tilt][mode]
    std::vector<std::array<ModeCore, 4>> cores;
    // [power] bit errors / bits, filled when with_ber
    std::vector<std::size_t> ber_errors;
    std::vector<std::size_t> ber_bits;
    std::string first_failure;
};

std::vector<std::size_t> modes_needed(const SweepConfig& cfg) {
    if (cfg.policy == ModePolicy::Fixed) {
        return {mode_index(cfg.fixed_qt, cfg.fixed_qr)};
    }
    return {0, 1, 2, 3};
}

int worker_count(int requested, std::size_t jobs) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    n = std::max(1, n);
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), jobs));
}

// Runs body(i) for i in [0, jobs) on a small pool. Each index writes only its
// own slot, so the reduction order is independent of scheduling.
void parallel_for(std::size_t jobs, int threads, const std::function<void(std::size_t)>& body) {
    const int n = worker_count(threads, jobs);
    if (n <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < jobs; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    pool.clear();
    if (error) {
        std::rethrow_exception(error);
    }
}

PrecoderInputs make_inputs(const SweepConfig& cfg, const OstbcCode& code, const RealMat& a,
                           RealMat r_s, RealMat r_p, double p_tmax) {
    PrecoderInputs in;
    in.a = a;
    in.kappa = code.kappa;
    in.r_s = std::move(r_s);
    in.r_p = std::move(r_p);
    in.rho_sr = cfg.rho_sr;
    in.p_tmax = p_tmax;
    in.eta = from_db(cfg.eta_db);
    in.n_tx = code.n_tx;
    in.epsilon_reg = cfg.epsilon_reg;
    return in;
}

struct Gated {
    double snr{0};
    double interference{0};
    bool interference_limited{false};
};

Gated gate_core(const ModeCore& core, const SweepConfig& cfg, const OstbcCode& code,
                double p_tmax, double eta) {
    PrecoderInputs in;
    in.kappa = code.kappa;
    in.rho_sr = cfg.rho_sr;
    in.p_tmax = p_tmax;
    in.eta = eta;
    in.n_tx = code.n_tx;
    const Gate g = gate_alpha(in, core.tr_q, core.delta);
    Gated out;
    out.snr = snr_estimate(cfg.rho_sr, g.alpha, code.n_tx, code.symbols, core.noise_trace);
    out.interference = interference_closed_form(cfg.rho_sr, g.alpha, core.tr_q, code.kappa,
                                                code.n_tx);
    out.interference_limited = g.binding == Binding::InterferenceLimited;
    return out;
}

// Picks the mode the policy would use for one instance; -1 when none is solvable.
int choose(const std::array<ModeCore, 4>& cores, const SweepConfig& cfg, const OstbcCode& code,
           double p_tmax, double eta) {
    if (cfg.policy == ModePolicy::Fixed) {
        const std::size_t m = mode_index(cfg.fixed_qt, cfg.fixed_qr);
        return cores[m].ok ? static_cast<int>(m) : -1;
    }
    std::array<double, 4> snr{};
    bool any = false;
    for (std::size_t m = 0; m < 4; ++m) {
        snr[m] = cores[m].ok ? gate_core(cores[m], cfg, code, p_tmax, eta).snr : kNegInf;
        any = any || cores[m].ok;
    }
    return any ? static_cast<int>(select_mode(snr)) : -1;
}

double average(double sum_linear, double sum_db, std::size_t count, Averaging averaging) {
    if (count == 0) {
        return kNaN;
    }
    if (averaging == Averaging::Linear) {
        return to_db(sum_linear / static_cast<double>(count));
    }
    return sum_db / static_cast<double>(count);
}

} // namespace

double to_db(double linear) {
    return 10.0 * std::log10(linear);
}

double from_db(double db) {
    return std::pow(10.0, db / 10.0);
}

void SweepConfig::validate() const {
    if (power_db.empty()) {
        throw std::invalid_argument("power grid is empty");
    }
    for (double p : power_db) {
        if (!std::isfinite(p)) {
            throw std::invalid_argument("power grid contains a non-finite value");
        }
    }
    if (!std::isfinite(eta_db)) {
        throw std::invalid_argument("eta_db must be finite");
    }
    if (n_tilt < 1 || n_channel < 1 || n_noise < 1 || n_corr_samples < 1) {
        throw std::invalid_argument("sample counts must be >= 1");
    }
    if (!(rho_sr > 0) || !(epsilon_reg >= 0)) {
        throw std::invalid_argument("rho_sr must be > 0 and epsilon_reg >= 0");
    }
    const OstbcCode code = build_code(this->code);
    if (sl.n_tx != code.n_tx || spl.n_tx != code.n_tx) {
        throw std::invalid_argument("transmit antenna count must equal the code's N_t = " +
                                    std::to_string(code.n_tx));
    }
    sl.validate();
    spl.validate();
}

SweepResult run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const OstbcCode code = build_code(cfg.code);
    const RealMat a = dispersion(code);
    const std::vector<double> tilts = tilt_samples(cfg.n_tilt);
    const std::vector<std::size_t> needed = modes_needed(cfg);
    const double eta = from_db(cfg.eta_db);
    const std::size_t n_draws = static_cast<std::size_t>(cfg.n_channel);
    const std::size_t n_power = cfg.power_db.size();

    std::vector<DrawData> draws(n_draws);

    parallel_for(n_draws, cfg.threads, [&](std::size_t c) {
        DrawData& d = draws[c];
        Rng sl_rng = make_stream(cfg.seed, c, kSlPaths);
        Rng spl_rng = make_stream(cfg.seed, c, kSplPaths);
        const PathSet sl_paths = draw_paths(cfg.sl, sl_rng);
        const PathSet spl_geometry = draw_paths(cfg.spl, spl_rng);

        std::array<std::optional<TiltCorrelation>, 2> spl_corr;
        std::array<RealMat, 4> r_s;
        for (std::size_t m : needed) {
            const auto [qt, qr] = kModes[m];
            const int t = qt == Polarization::V ? 0 : 1;
            if (!spl_corr[t]) {
                Rng rng = make_stream(cfg.seed, c, kSplCorrelation + t);
                spl_corr[t].emplace(spl_geometry, cfg.spl, qt, code.block_length,
                                    cfg.n_corr_samples, rng);
            }
            if (cfg.average_sl_correlation) {
                Rng rng = make_stream(cfg.seed, c, kSlCorrelation + t);
                r_s[m] = correlation(sl_paths, cfg.sl, qt, qr, 0.0, code.block_length,
                                     cfg.n_corr_samples, rng);
            } else {
                const RealMat heq = equivalent(realize(sl_paths, qt, qr, 0.0, cfg.sl),
                                               code.block_length);
                r_s[m] = heq.transpose() * heq;
            }
        }

        d.cores.resize(tilts.size());
        for (std::size_t j = 0; j < tilts.size(); ++j) {
            for (std::size_t m : needed) {
                const int t = kModes[m][0] == Polarization::V ? 0 : 1;
                ModeCore& core = d.cores[j][m];
                try {
                    const PrecoderInputs in = make_inputs(
                        cfg, code, a, r_s[m], spl_corr[t]->at(cfg.pr_mode, tilts[j]), 1.0);
                    const PrecoderCore pc = analyze(in);
                    core = {true, pc.tr_q, pc.delta, pc.detector_noise_trace};
                } catch (const DegenerateGeometryError& e) {
                    core.ok = false;
                    if (d.first_failure.empty()) {
                        std::ostringstream os;
                        os << "draw " << c << " tilt " << j << " mode "
                           << to_string(kModes[m][0]) << to_string(kModes[m][1]) << ": "
                           << e.what();
                        d.first_failure = os.str();
                    }
                }
            }
        }

        if (!cfg.with_ber) {
            return;
        }
        d.ber_errors.assign(n_power, 0);
        d.ber_bits.assign(n_power, 0);
        const std::size_t j = c % tilts.size();
        const int blocks = std::max(1, (cfg.n_noise + cfg.n_channel - 1) / cfg.n_channel);
        for (std::size_t p = 0; p < n_power; ++p) {
            const double p_tmax = from_db(cfg.power_db[p]);
            const int m = choose(d.cores[j], cfg, code, p_tmax, eta);
            if (m < 0) {
                continue;
            }
            const auto [qt, qr] = kModes[static_cast<std::size_t>(m)];
            const int t = qt == Polarization::V ? 0 : 1;
            PrecoderInputs in = make_inputs(cfg, code, a, r_s[m],
                                            spl_corr[t]->at(cfg.pr_mode, tilts[j]), p_tmax);
            BerSnapshot snap;
            snap.a = a;
            snap.heq = equivalent(realize(sl_paths, qt, qr, 0.0, cfg.sl), code.block_length);
            snap.w = solve(in).w;
            snap.rho_sr = cfg.rho_sr;
            snap.n_tx = code.n_tx;
            Rng rng = make_stream(cfg.seed, c, kBer + p);
            const BerResult r = run_ber(snap, blocks, 1.0, rng);
            d.ber_errors[p] = r.bit_errors;
            d.ber_bits[p] = r.bits;
        }
    });

    SweepResult result;
    result.seed = cfg.seed;
    result.policy = cfg.policy;
    result.fixed_qt = cfg.fixed_qt;
    result.fixed_qr = cfg.fixed_qr;
    result.eta = eta;
    result.instances = n_draws * tilts.size();

    // Degeneracy is a property of the geometry, not of the power point.
    std::string first_failure;
    for (const DrawData& d : draws) {
        for (const auto& cores : d.cores) {
            bool any = false;
            for (std::size_t m : needed) {
                any = any || cores[m].ok;
            }
            if (!any) {
                ++result.degenerate;
            }
        }
        if (first_failure.empty() && !d.first_failure.empty()) {
            first_failure = d.first_failure;
        }
    }
    if (static_cast<double>(result.degenerate) >
        cfg.max_degenerate_fraction * static_cast<double>(result.instances)) {
        std::ostringstream os;
        os << "sweep aborted: " << result.degenerate << " of " << result.instances
           << " instances have degenerate geometry (seed " << cfg.seed << "; first: "
           << first_failure << ")";
        throw DegenerateGeometryError(os.str());
    }

    for (std::size_t p = 0; p < n_power; ++p) {
        const double p_tmax = from_db(cfg.power_db[p]);
        PowerPoint pt;
        pt.power_db = cfg.power_db[p];
        pt.mode_snr_db.fill(kNaN);
        pt.mode_frac_il.fill(kNaN);
        pt.mode_interference.fill(kNaN);
        pt.draw_snr.assign(n_draws, kNaN);

        double sum_lin = 0, sum_db = 0, sum_interf = 0;
        std::size_t count = 0, il = 0;
        std::array<double, 4> m_lin{}, m_db{}, m_interf{};
        std::array<std::size_t, 4> m_count{}, m_il{};

        for (std::size_t c = 0; c < n_draws; ++c) {
            double draw_sum = 0;
            std::size_t draw_count = 0;
            for (const auto& cores : draws[c].cores) {
                for (std::size_t m : needed) {
                    if (!cores[m].ok) {
                        continue;
                    }
                    const Gated g = gate_core(cores[m], cfg, code, p_tmax, eta);
                    m_lin[m] += g.snr;
                    m_db[m] += to_db(g.snr);
                    m_interf[m] += g.interference;
                    ++m_count[m];
                    m_il[m] += g.interference_limited ? 1 : 0;
                }
                const int chosen = choose(cores, cfg, code, p_tmax, eta);
                if (chosen < 0) {
                    continue;
                }
                const Gated g =
                    gate_core(cores[static_cast<std::size_t>(chosen)], cfg, code, p_tmax, eta);
                sum_lin += g.snr;
                sum_db += to_db(g.snr);
                sum_interf += g.interference;
                pt.max_interference = std::max(pt.max_interference, g.interference);
                il += g.interference_limited ? 1 : 0;
                ++count;
                ++pt.chosen[static_cast<std::size_t>(chosen)];
                draw_sum += g.snr;
                ++draw_count;
            }
            if (draw_count > 0) {
                pt.draw_snr[c] = draw_sum / static_cast<double>(draw_count);
            }
        }

        pt.snr_db = average(sum_lin, sum_db, count, cfg.averaging);
        pt.frac_interference_limited =
            count > 0 ? static_cast<double>(il) / static_cast<double>(count) : kNaN;
        pt.mean_interference = count > 0 ? sum_interf / static_cast<double>(count) : kNaN;
        for (std::size_t m : needed) {
            pt.mode_snr_db[m] = average(m_lin[m], m_db[m], m_count[m], cfg.averaging);
            if (m_count[m] > 0) {
                pt.mode_frac_il[m] =
                    static_cast<double>(m_il[m]) / static_cast<double>(m_count[m]);
                pt.mode_interference[m] = m_interf[m] / static_cast<double>(m_count[m]);
            }
        }
        if (cfg.with_ber) {
            std::size_t errors = 0, bits = 0;
            for (const DrawData& d : draws) {
                errors += d.ber_errors[p];
                bits += d.ber_bits[p];
            }
            if (bits > 0) {
                pt.ber = static_cast<double>(errors) / static_cast<double>(bits);
            }
        }
        result.points.push_back(std::move(pt));
    }
    return result;
}

ModeComparison compare_modes(const SweepConfig& cfg) {
    ModeComparison out;
    for (std::size_t m = 0; m < 4; ++m) {
        SweepConfig mode_cfg = cfg;
        mode_cfg.policy = ModePolicy::Fixed;
        mode_cfg.fixed_qt = kModes[m][0];
        mode_cfg.fixed_qr = kModes[m][1];
        try {
            out.modes[m] = run_sweep(mode_cfg);
        } catch (const DegenerateGeometryError& e) {
            out.failure[m] = e.what();
        }
    }
    out.gap_db.assign(cfg.power_db.size(), kNaN);
    const bool all = std::all_of(out.modes.begin(), out.modes.end(),
                                 [](const auto& r) { return r.has_value(); });
    if (!all) {
        return out;
    }
    for (std::size_t p = 0; p < cfg.power_db.size(); ++p) {
        const double matched = 0.5 * (out.modes[0]->points[p].snr_db + out.modes[3]->points[p].snr_db);
        const double mismatched =
            0.5 * (out.modes[1]->points[p].snr_db + out.modes[2]->points[p].snr_db);
        out.gap_db[p] = matched - mismatched;
    }
    return out;
}

BerResult run_ber(const BerSnapshot& snap, int n_blocks, double noise_scale, Rng& rng) {
    const Eigen::Index k = snap.a.cols() / 2;
    const RealMat detector = snap.a.transpose() * snap.heq.transpose();
    const RealMat signal_map =
        std::sqrt(snap.rho_sr / snap.n_tx) * detector * snap.heq * snap.w * snap.a;

    std::bernoulli_distribution coin(0.5);
    std::normal_distribution<double> noise(0.0, std::sqrt(0.5));
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(2 * k));
    RealVec n(snap.heq.rows());

    BerResult out;
    double signal_energy = 0, noise_energy = 0;
    for (int b = 0; b < n_blocks; ++b) {
        for (auto& bit : bits) {
            bit = coin(rng) ? 1 : 0;
        }
        const std::vector<cplx> s = qpsk_mod(bits);
        const RealVec clean = signal_map * stack_symbols(s);
        for (Eigen::Index i = 0; i < n.size(); ++i) {
            n(i) = noise(rng);
        }
        const RealVec perturbation = noise_scale * (detector * n);
        const std::vector<std::uint8_t> decided = qpsk_demod(clean + perturbation);
        for (std::size_t i = 0; i < bits.size(); ++i) {
            out.bit_errors += decided[i] != bits[i] ? 1 : 0;
        }
        out.bits += bits.size();
        signal_energy += clean.squaredNorm();
        noise_energy += perturbation.squaredNorm();
    }
    out.ber = out.bits > 0 ? static_cast<double>(out.bit_errors) / static_cast<double>(out.bits)
                           : 0.0;
    out.measured_snr = noise_energy > 0 ? signal_energy / noise_energy
                                        : std::numeric_limits<double>::infinity();
    return out;
}

double q_function(double x) {
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

double qpsk_ber(double snr) {
    return q_function(std::sqrt(snr));
}

std::vector<TableRow> summarize(const SweepResult& result) {
    std::vector<TableRow> rows;
    for (const PowerPoint& pt : result.points) {
        if (result.policy == ModePolicy::Fixed) {
            rows.push_back({pt.power_db, std::string(to_string(result.fixed_qt)),
                            std::string(to_string(result.fixed_qr)), pt.snr_db,
                            pt.frac_interference_limited, pt.mean_interference, pt.ber});
            continue;
        }
        rows.push_back({pt.power_db, "best", "best", pt.snr_db, pt.frac_interference_limited,
                        pt.mean_interference, pt.ber});
        for (std::size_t m = 0; m < 4; ++m) {
            rows.push_back({pt.power_db, std::string(to_string(kModes[m][0])),
                            std::string(to_string(kModes[m][1])), pt.mode_snr_db[m],
                            pt.mode_frac_il[m], pt.mode_interference[m], std::nullopt});
        }
    }
    return rows;
}

std::vector<TableRow> summarize(const ModeComparison& comparison) {
    std::vector<TableRow> rows;
    for (const auto& mode : comparison.modes) {
        if (!mode) {
            continue;
        }
        const std::vector<TableRow> r = summarize(*mode);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    return rows;
}

} // namespace ostbccr
