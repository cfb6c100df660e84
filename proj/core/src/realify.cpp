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

#include "ostbccr/realify.hpp"

#include <string>

namespace ostbccr {

RealVec underline(const ComplexMat& p) {
    if (p.size() == 0) {
        throw DimensionError("underline: empty matrix");
    }
    const Eigen::Index n = p.size();
    RealVec out(2 * n);
    // Eigen storage is column-major, so linear index order is vec().
    for (Eigen::Index i = 0; i < n; ++i) {
        out(i) = p(i).real();
        out(n + i) = p(i).imag();
    }
    return out;
}

ComplexMat ununderline(const RealVec& v, Eigen::Index rows, Eigen::Index cols) {
    const Eigen::Index n = rows * cols;
    if (rows <= 0 || cols <= 0 || v.size() != 2 * n) {
        throw DimensionError("ununderline: vector of length " + std::to_string(v.size()) +
                             " cannot hold a " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " complex matrix");
    }
    ComplexMat out(rows, cols);
    for (Eigen::Index i = 0; i < n; ++i) {
        out(i) = cplx(v(i), v(n + i));
    }
    return out;
}

ComplexMat kron_identity(const ComplexMat& h, int blocks) {
    if (blocks < 1) {
        throw DimensionError("kron_identity: block count must be >= 1");
    }
    const Eigen::Index r = h.rows();
    const Eigen::Index c = h.cols();
    ComplexMat out = ComplexMat::Zero(blocks * r, blocks * c);
    for (int t = 0; t < blocks; ++t) {
        out.block(t * r, t * c, r, c) = h;
    }
    return out;
}

RealMat real_representation(const ComplexMat& m) {
    const Eigen::Index r = m.rows();
    const Eigen::Index c = m.cols();
    RealMat out(2 * r, 2 * c);
    out.topLeftCorner(r, c) = m.real();
    out.topRightCorner(r, c) = -m.imag();
    out.bottomLeftCorner(r, c) = m.imag();
    out.bottomRightCorner(r, c) = m.real();
    return out;
}

RealMat realify_channel(const ComplexMat& h, int blocks) {
    return real_representation(kron_identity(h, blocks));
}

} // namespace ostbccr
