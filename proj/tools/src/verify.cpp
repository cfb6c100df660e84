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

#include "ostbccr_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "ostbccr/realify.hpp"

namespace ostbccr::cli {

namespace {

constexpr int kInstances = 20;

enum : std::uint64_t {
    kTagC2 = 100,
    kTagC4 = 200,
    kTagSymbols = 300,
    kTagNoise = 400,
};

std::string replay(std::uint64_t seed, const char* code, std::uint64_t index) {
    std::ostringstream os;
    os << "seed " << seed << " code " << code << " instance " << index;
    return os.str();
}

// Records max(metric) over instances; exceptions count as failures.
class Check {
public:
    Check(std::string name, double tolerance) {
        r_.name = std::move(name);
        r_.tolerance = tolerance;
    }

    void observe(double metric, const std::string& where) {
        if (!(metric <= r_.tolerance) && r_.pass) {
            r_.pass = false;
            std::ostringstream os;
            os << where << " (metric " << metric << ")";
            r_.detail = os.str();
        }
        if (std::isnan(metric) || metric > r_.worst) {
            r_.worst = metric;
        }
    }

    void run(const std::string& where, const std::function<double()>& body) {
        try {
            observe(body(), where);
        } catch (const std::exception& e) {
            fail(where + ": " + e.what());
        }
    }

    void fail(const std::string& detail) {
        if (r_.pass) {
            r_.pass = false;
            r_.detail = detail;
        }
    }

    CheckResult result() const { return r_; }

private:
    CheckResult r_;
};

double relative(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

} // namespace

RandomInstance random_instance(CodeName name, std::uint64_t seed, std::uint64_t index, int n_rx) {
    RandomInstance inst;
    inst.code = build_code(name);
    const std::uint64_t tag = name == CodeName::C2 ? kTagC2 : kTagC4;
    Rng rng = make_stream(seed, index, tag);
    std::normal_distribution<double> n(0.0, 1.0);
    std::uniform_real_distribution<double> db(-10.0, 20.0);

    const int nt = inst.code.n_tx;
    const int t = inst.code.block_length;
    ComplexMat h(n_rx, nt);
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        h(i) = cplx(n(rng), n(rng)) / std::sqrt(2.0);
    }
    inst.heq = realify_channel(h, t);

    const Eigen::Index dim = 2 * nt * t;
    RealMat b(dim, dim);
    for (Eigen::Index i = 0; i < b.size(); ++i) {
        b(i) = n(rng);
    }
    RealMat r_p = b * b.transpose() / static_cast<double>(dim);
    r_p.diagonal().array() += 0.05;

    PrecoderInputs& in = inst.inputs;
    in.a = dispersion(inst.code);
    in.kappa = inst.code.kappa;
    in.r_s = inst.heq.transpose() * inst.heq;
    in.r_p = 0.5 * (r_p + r_p.transpose());
    in.rho_sr = 1.0;
    in.p_tmax = from_db(db(rng));
    in.eta = from_db(db(rng));
    in.n_tx = nt;
    return inst;
}

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerifyReport run_verify(std::uint64_t seed, QForm form) {
    VerifyReport report;
    const std::array<std::pair<CodeName, const char*>, 2> codes{
        {{CodeName::C2, "C2"}, {CodeName::C4, "C4"}}};

    {
        Check unitary("unitary property X X^H = c sum|s|^2 I", 1e-10);
        Check gram("dispersion A^T A = kappa I", 1e-12);
        for (const auto& [name, label] : codes) {
            const OstbcCode code = build_code(name);
            const RealMat a = dispersion(code);
            gram.observe((a.transpose() * a - code.kappa * RealMat::Identity(a.cols(), a.cols()))
                             .norm(),
                         replay(seed, label, 0));
            Rng rng = make_stream(seed, 0, kTagSymbols + static_cast<std::uint64_t>(name));
            std::normal_distribution<double> n(0.0, 1.0);
            for (int i = 0; i < 1000; ++i) {
                std::vector<cplx> s(static_cast<std::size_t>(code.symbols));
                double energy = 0;
                for (auto& v : s) {
                    v = cplx(n(rng), n(rng));
                    energy += std::norm(v);
                }
                const ComplexMat x = encode(code, s);
                const ComplexMat target =
                    code.unitary_scale() * energy * ComplexMat::Identity(code.n_tx, code.n_tx);
                unitary.observe((x * x.adjoint() - target).norm(),
                                replay(seed, label, static_cast<std::uint64_t>(i)));
            }
        }
        report.checks.push_back(unitary.result());
        report.checks.push_back(gram.result());
    }

    Check structure("structure constraint A^T R_S W A = alpha I", 1e-8);
    Check oracle("closed form matches KKT oracle", 1e-6);
    Check optimality("closed-form objective <= oracle objective", 1e-8);
    Check interference("interference trace == alpha^2 trQ closed form", 1e-10);
    Check power("transmit power trace == alpha^2 delta closed form", 1e-10);
    Check tightness("gate: feasible with the binding constraint tight", 1e-9);
    Check decoupling("noiseless detector output proportional to s", 1e-8);
    Check mc_snr("Monte-Carlo post-detection SNR within 5% of estimate", 0.05);

    for (const auto& [name, label] : codes) {
        for (std::uint64_t i = 0; i < kInstances; ++i) {
            const RandomInstance inst = random_instance(name, seed, i);
            const PrecoderInputs& in = inst.inputs;
            const std::string where = replay(seed, label, i);

            structure.run(where, [&] {
                const RealMat w = solve_w(in, 1.0, form);
                return structure_residual(in.a, in.r_s, w, 1.0);
            });

            PrecoderSolution sol;
            try {
                sol = solve(in, form);
            } catch (const std::exception& e) {
                for (Check* c : {&interference, &power, &tightness, &decoupling}) {
                    c->fail(where + ": " + e.what());
                }
                continue;
            }
            const RealMat rp = regularized(in.r_p, in.epsilon_reg);

            interference.run(where, [&] {
                return relative(interference_power(sol.w, rp, in.rho_sr, in.n_tx),
                                sol.interference);
            });
            power.run(where, [&] {
                return relative(transmit_power(sol.w, in.rho_sr, in.n_tx), sol.transmit_power);
            });
            tightness.run(where, [&] {
                const double pt = transmit_power(sol.w, in.rho_sr, in.n_tx) / in.p_tmax;
                const double it = interference_power(sol.w, rp, in.rho_sr, in.n_tx) / in.eta;
                const double over = std::max(pt, it) - 1.0; // both <= 1 and the max is 1
                const double tight = sol.binding == Binding::PowerLimited ? pt : it;
                return std::max(std::abs(over), std::abs(tight - 1.0));
            });
            decoupling.run(where, [&] {
                const RealMat m = in.a.transpose() * in.r_s * sol.w * in.a;
                RealMat off = m;
                off.diagonal().setZero();
                const double diag_min = m.diagonal().minCoeff();
                const double spread = m.diagonal().maxCoeff() - diag_min;
                if (!(diag_min > 0)) {
                    return std::numeric_limits<double>::infinity();
                }
                return std::max(off.cwiseAbs().maxCoeff(), spread) / diag_min;
            });

            if (name == CodeName::C2) {
                oracle.run(where, [&] {
                    const RealMat wo = oracle_solve(in, sol.alpha);
                    return (wo - sol.w).norm() / wo.norm();
                });
                optimality.run(where, [&] {
                    const RealMat wo = oracle_solve(in, sol.alpha);
                    const double closed = quadratic_objective(sol.w, rp);
                    const double best = quadratic_objective(wo, rp);
                    return std::max(0.0, closed / best - 1.0);
                });
            }
            if (i < 3) {
                mc_snr.run(where, [&] {
                    BerSnapshot snap{in.a, inst.heq, sol.w, in.rho_sr, in.n_tx};
                    Rng rng = make_stream(seed, i, kTagNoise + static_cast<std::uint64_t>(name));
                    const BerResult r = run_ber(snap, 10000, 1.0, rng);
                    return relative(r.measured_snr, sol.snr_est);
                });
            }
        }
    }
    for (const Check* c : {&structure, &oracle, &optimality, &interference, &power, &tightness,
                           &decoupling, &mc_snr}) {
        report.checks.push_back(c->result());
    }
    return report;
}

void print_report(std::ostream& os, const VerifyReport& report, std::uint64_t seed) {
    os << "verify seed " << seed << '\n';
    for (const CheckResult& c : report.checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  worst=" << c.worst
           << " tol=" << c.tolerance;
        if (!c.pass) {
            os << "  replay: " << c.detail;
        }
        os << '\n';
    }
    os << (report.all_pass() ? "all invariants pass" : "invariant failure") << '\n';
}

} // namespace ostbccr::cli
