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
#include <span>
#include <string_view>
#include <vector>

#include "ostbccr/types.hpp"

namespace ostbccr {

enum class CodeName { C2, C4 };

CodeName parse_code_name(std::string_view name);
std::string_view to_string(CodeName name);

/// An orthogonal space-time block code in its linear (dispersion) form
///
///   X = sum_k C_k Re(s_k) + D_k Im(s_k),   X is n_tx x block_length.
///
/// Codes are stored antennas-as-rows. kappa is the common squared Frobenius
/// norm of every C_k and D_k, so that A^T A = kappa * I and
/// X X^H = (kappa / n_tx) * sum |s_k|^2 * I.
struct OstbcCode {
    CodeName name{CodeName::C2};
    int n_tx{0};
    int block_length{0};
    int symbols{0};
    std::vector<ComplexMat> c;
    std::vector<ComplexMat> d;
    double kappa{0.0};

    /// Constant c in X X^H = c * sum|s_k|^2 * I.
    double unitary_scale() const { return kappa / n_tx; }
};

OstbcCode build_code(CodeName name);
OstbcCode build_code(std::string_view name);

/// Compact dispersion matrix A = [C_1.., C_K.., D_1.., D_K..] (underlined
/// columns), size 2*n_tx*T x 2K.
RealMat dispersion(const OstbcCode& code);

/// Throws DimensionError if symbols.size() != code.symbols.
ComplexMat encode(const OstbcCode& code, std::span<const cplx> symbols);

/// [Re s_1 .. Re s_K, Im s_1 .. Im s_K]
RealVec stack_symbols(std::span<const cplx> symbols);

/// Gray-mapped unit-energy QPSK: (b1 b2) -> ((1-2 b1) + i (1-2 b2)) / sqrt 2.
/// Throws std::invalid_argument on an odd bit count or non-binary values.
std::vector<cplx> qpsk_mod(std::span<const std::uint8_t> bits);

/// Hard decisions from soft outputs ordered as stack_symbols().
std::vector<std::uint8_t> qpsk_demod(const RealVec& soft);

/// Linear soft-output detector: A^T Heq^T y.
RealVec soft_detect(const RealMat& a, const RealMat& heq, const RealVec& y);

} // namespace ostbccr
