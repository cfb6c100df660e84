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

#include <string>

#include "ostbccr/precoder.hpp"

namespace ostbccr {

namespace {

RealMat kron(const RealMat& x, const RealMat& y) {
    RealMat out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        }
    }
    return out;
}

} // namespace

// Stationarity and feasibility over w = vec(W):
//
//   [ 2 (I (x) Rp)   C^T ] [ w      ]   [ 0              ]
//   [ C              0   ] [ lambda ] = [ alpha vec(I)   ]
//
// with C = A^T (x) (A^T R_S), since vec(B W A) = (A^T (x) B) vec(W).
RealMat oracle_solve(const PrecoderInputs& in, double alpha) {
    in.validate();
    const Eigen::Index n = in.a.rows();
    const Eigen::Index m = in.a.cols();
    const Eigen::Index nw = n * n;
    const Eigen::Index nc = m * m;

    const RealMat rp = regularized(in.r_p, in.epsilon_reg);
    const RealMat c = kron(in.a.transpose(), in.a.transpose() * in.r_s);

    RealMat kkt = RealMat::Zero(nw + nc, nw + nc);
    kkt.topLeftCorner(nw, nw) = 2.0 * kron(RealMat::Identity(n, n), rp);
    kkt.topRightCorner(nw, nc) = c.transpose();
    kkt.bottomLeftCorner(nc, nw) = c;

    RealVec rhs = RealVec::Zero(nw + nc);
    const RealMat target = alpha * RealMat::Identity(m, m);
    rhs.tail(nc) = Eigen::Map<const RealVec>(target.data(), nc);

    Eigen::FullPivLU<RealMat> lu(kkt);
    if (lu.rank() < kkt.rows()) {
        throw DegenerateGeometryError("KKT system is singular (rank " +
                                      std::to_string(lu.rank()) + " of " +
                                      std::to_string(kkt.rows()) + ")");
    }
    const RealVec sol = lu.solve(rhs);
    return Eigen::Map<const RealMat>(sol.data(), n, n);
}

} // namespace ostbccr
