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

#include <random>

#include "ostbccr/realify.hpp"

using namespace ostbccr;

namespace {

ComplexMat random_complex(Eigen::Index r, Eigen::Index c, std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    ComplexMat m(r, c);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        m(i) = cplx(n(rng), n(rng));
    }
    return m;
}

} // namespace

TEST(Underline, HandExample) {
    ComplexMat p(2, 2);
    p << cplx(1, 5), cplx(3, 7), cplx(2, 6), cplx(4, 8);
    RealVec expect(8);
    expect << 1, 2, 3, 4, 5, 6, 7, 8; // column-major real parts, then imaginary
    EXPECT_EQ(underline(p), expect);
}

TEST(Underline, RoundTrip) {
    std::mt19937_64 rng(3);
    const ComplexMat p = random_complex(3, 5, rng);
    EXPECT_EQ(ununderline(underline(p), 3, 5), p);
}

TEST(Underline, RejectsBadShapes) {
    EXPECT_THROW(underline(ComplexMat(0, 0)), std::invalid_argument);
    EXPECT_THROW(ununderline(RealVec::Zero(7), 2, 2), DimensionError);
}

TEST(Underline, LinearOverReals) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const ComplexMat p = random_complex(2, 3, rng);
        const ComplexMat q = random_complex(2, 3, rng);
        const double a = 0.3 * i - 7.0;
        EXPECT_LT((underline(a * p + q) - (a * underline(p) + underline(q))).norm(), 1e-12);
    }
}

TEST(Underline, Isometry) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const ComplexMat p = random_complex(4, 2, rng);
        EXPECT_NEAR(underline(p).norm(), p.norm(), 1e-12);
    }
}

TEST(RealRepresentation, HandExample) {
    ComplexMat m(1, 1);
    m << cplx(2, 3);
    RealMat expect(2, 2);
    expect << 2, -3, 3, 2;
    EXPECT_EQ(real_representation(m), expect);
}

TEST(RealRepresentation, MatchesUnderlineOfProduct) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const ComplexMat m = random_complex(3, 4, rng);
        const ComplexMat p = random_complex(4, 1, rng);
        EXPECT_LT((underline(m * p) - real_representation(m) * underline(p)).norm(), 1e-12);
    }
}

TEST(RealRepresentation, Homomorphism) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        const ComplexMat a = random_complex(3, 4, rng);
        const ComplexMat b = random_complex(4, 2, rng);
        EXPECT_LT((real_representation(a * b) - real_representation(a) * real_representation(b))
                      .norm(),
                  1e-12);
        EXPECT_LT((real_representation(a.adjoint()) - real_representation(a).transpose()).norm(),
                  1e-15);
    }
}

TEST(KronIdentity, BlockDiagonal) {
    std::mt19937_64 rng(17);
    const ComplexMat h = random_complex(2, 3, rng);
    const ComplexMat k = kron_identity(h, 4);
    ASSERT_EQ(k.rows(), 8);
    ASSERT_EQ(k.cols(), 12);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const ComplexMat blk = k.block(2 * i, 3 * j, 2, 3);
            if (i == j) {
                EXPECT_EQ(blk, h);
            } else {
                EXPECT_EQ(blk.norm(), 0.0);
            }
        }
    }
}

TEST(RealifyChannel, ActsOnUnderlinedCodeword) {
    // underline(H X) = Heq underline(X) for an N_t x T codeword X.
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        const ComplexMat h = random_complex(2, 4, rng);
        const ComplexMat x = random_complex(4, 8, rng);
        const RealMat heq = realify_channel(h, 8);
        ASSERT_EQ(heq.rows(), 2 * 2 * 8);
        ASSERT_EQ(heq.cols(), 2 * 4 * 8);
        EXPECT_LT((underline(h * x) - heq * underline(x)).norm(), 1e-11);
    }
}
