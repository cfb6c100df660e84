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

#include "ostbccr/ostbc.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ostbccr/realify.hpp"

namespace ostbccr {

namespace {

// One entry of a printed transmission matrix: +/- s_k or +/- conj(s_k).
struct Entry {
    int symbol;  // 0-based
    int sign;
    bool conj;
};

template <std::size_t Rows, std::size_t Cols>
using Layout = std::array<std::array<Entry, Cols>, Rows>;

// Rows are time slots, columns are antennas.
constexpr Layout<2, 2> kAlamouti{{
    {{{0, +1, false}, {1, +1, false}}},
    {{{1, -1, true}, {0, +1, true}}},
}};

constexpr Layout<8, 4> kHalfRate4{{
    {{{0, +1, false}, {1, +1, false}, {2, +1, false}, {3, +1, false}}},
    {{{1, -1, false}, {0, +1, false}, {3, -1, false}, {2, +1, false}}},
    {{{2, -1, false}, {3, +1, false}, {0, +1, false}, {1, -1, false}}},
    {{{3, -1, false}, {2, -1, false}, {1, +1, false}, {0, +1, false}}},
    {{{0, +1, true}, {1, +1, true}, {2, +1, true}, {3, +1, true}}},
    {{{1, -1, true}, {0, +1, true}, {3, -1, true}, {2, +1, true}}},
    {{{2, -1, true}, {3, +1, true}, {0, +1, true}, {1, -1, true}}},
    {{{3, -1, true}, {2, -1, true}, {1, +1, true}, {0, +1, true}}},
}};

// Evaluates the printed layout at the given symbols and returns it transposed
// to antennas x time slots.
template <std::size_t Rows, std::size_t Cols>
ComplexMat evaluate(const Layout<Rows, Cols>& layout, std::span<const cplx> s) {
    ComplexMat x(static_cast<Eigen::Index>(Cols), static_cast<Eigen::Index>(Rows));
    for (std::size_t t = 0; t < Rows; ++t) {
        for (std::size_t a = 0; a < Cols; ++a) {
            const Entry& e = layout[t][a];
            const cplx v = e.conj ? std::conj(s[e.symbol]) : s[e.symbol];
            x(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(t)) =
                static_cast<double>(e.sign) * v;
        }
    }
    return x;
}

template <std::size_t Rows, std::size_t Cols>
OstbcCode from_layout(CodeName name, const Layout<Rows, Cols>& layout, int symbols) {
    OstbcCode code;
    code.name = name;
    code.n_tx = static_cast<int>(Cols);
    code.block_length = static_cast<int>(Rows);
    code.symbols = symbols;
    // X is real-linear in s, so the coefficient of Re s_k (Im s_k) is X at
    // s = e_k (s = i e_k).
    std::vector<cplx> s(static_cast<std::size_t>(symbols), cplx{});
    for (int k = 0; k < symbols; ++k) {
        s[k] = cplx(1.0, 0.0);
        code.c.push_back(evaluate(layout, s));
        s[k] = cplx(0.0, 1.0);
        code.d.push_back(evaluate(layout, s));
        s[k] = cplx{};
    }
    code.kappa = code.c.front().squaredNorm();
    return code;
}

} // namespace

CodeName parse_code_name(std::string_view name) {
    if (name == "C2" || name == "c2") {
        return CodeName::C2;
    }
    if (name == "C4" || name == "c4") {
        return CodeName::C4;
    }
    throw std::invalid_argument("unknown OSTBC code '" + std::string(name) +
                                "' (expected C2 or C4)");
}

std::string_view to_string(CodeName name) {
    return name == CodeName::C2 ? "C2" : "C4";
}

OstbcCode build_code(CodeName name) {
    switch (name) {
    case CodeName::C2:
        return from_layout(name, kAlamouti, 2);
    case CodeName::C4:
        return from_layout(name, kHalfRate4, 4);
    }
    throw std::invalid_argument("unknown OSTBC code");
}

OstbcCode build_code(std::string_view name) {
    return build_code(parse_code_name(name));
}

RealMat dispersion(const OstbcCode& code) {
    const Eigen::Index len = 2 * code.n_tx * code.block_length;
    RealMat a(len, 2 * code.symbols);
    for (int k = 0; k < code.symbols; ++k) {
        a.col(k) = underline(code.c[k]);
        a.col(code.symbols + k) = underline(code.d[k]);
    }
    return a;
}

ComplexMat encode(const OstbcCode& code, std::span<const cplx> symbols) {
    if (static_cast<int>(symbols.size()) != code.symbols) {
        throw DimensionError("encode: " + std::string(to_string(code.name)) + " takes " +
                             std::to_string(code.symbols) + " symbols, got " +
                             std::to_string(symbols.size()));
    }
    ComplexMat x = ComplexMat::Zero(code.n_tx, code.block_length);
    for (int k = 0; k < code.symbols; ++k) {
        x += code.c[k] * symbols[k].real() + code.d[k] * symbols[k].imag();
    }
    return x;
}

RealVec stack_symbols(std::span<const cplx> symbols) {
    const auto k = static_cast<Eigen::Index>(symbols.size());
    RealVec out(2 * k);
    for (Eigen::Index i = 0; i < k; ++i) {
        out(i) = symbols[i].real();
        out(k + i) = symbols[i].imag();
    }
    return out;
}

std::vector<cplx> qpsk_mod(std::span<const std::uint8_t> bits) {
    if (bits.size() % 2 != 0) {
        throw std::invalid_argument("qpsk_mod: odd bit count " + std::to_string(bits.size()));
    }
    const double scale = 1.0 / std::sqrt(2.0);
    std::vector<cplx> out;
    out.reserve(bits.size() / 2);
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        if (bits[i] > 1 || bits[i + 1] > 1) {
            throw std::invalid_argument("qpsk_mod: bits must be 0 or 1");
        }
        out.emplace_back((1.0 - 2.0 * bits[i]) * scale, (1.0 - 2.0 * bits[i + 1]) * scale);
    }
    return out;
}

std::vector<std::uint8_t> qpsk_demod(const RealVec& soft) {
    if (soft.size() % 2 != 0) {
        throw DimensionError("qpsk_demod: soft vector length must be even");
    }
    const Eigen::Index k = soft.size() / 2;
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(2 * k));
    for (Eigen::Index i = 0; i < k; ++i) {
        bits.push_back(soft(i) < 0.0 ? 1 : 0);
        bits.push_back(soft(k + i) < 0.0 ? 1 : 0);
    }
    return bits;
}

RealVec soft_detect(const RealMat& a, const RealMat& heq, const RealVec& y) {
    if (heq.cols() != a.rows() || heq.rows() != y.size()) {
        throw DimensionError("soft_detect: A is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", Heq is " +
                             std::to_string(heq.rows()) + "x" + std::to_string(heq.cols()) +
                             ", y has length " + std::to_string(y.size()));
    }
    return a.transpose() * (heq.transpose() * y);
}

} // namespace ostbccr
