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

#include "ostbccr/types.hpp"

namespace ostbccr {

/// Stacks vec(Re P) on top of vec(Im P), columns top-to-bottom.
/// A p x q matrix maps to a real vector of length 2pq.
RealVec underline(const ComplexMat& p);

/// Inverse of underline(). Throws DimensionError unless v.size() == 2*rows*cols.
ComplexMat ununderline(const RealVec& v, Eigen::Index rows, Eigen::Index cols);

/// Block diagonal I_T (x) H.
ComplexMat kron_identity(const ComplexMat& h, int blocks);

/// Real representation [[Re M, -Im M], [Im M, Re M]] of a complex matrix.
RealMat real_representation(const ComplexMat& m);

/// Equivalent real channel of T channel uses:
///   underline(H X) == realify_channel(H, T) * underline(X)
/// for every N_t x T complex X. Result is 2*T*N_r x 2*T*N_t.
RealMat realify_channel(const ComplexMat& h, int blocks);

} // namespace ostbccr
