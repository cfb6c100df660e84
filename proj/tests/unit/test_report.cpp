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

#include <cmath>
#include <sstream>

#include "ostbccr_cli/report.hpp"

using namespace ostbccr;
using namespace ostbccr::cli;

TEST(Format, Numbers) {
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(-5), "-5");
    EXPECT_EQ(format_number(NAN), "nan");
    EXPECT_EQ(format_number(INFINITY), "inf");
    EXPECT_EQ(format_number(-INFINITY), "-inf");
    const double x = 1.0 / 3.0;
    EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(Csv, HeaderAndRows) {
    std::vector<TableRow> rows(2);
    rows[0] = {-5, "best", "best", 1.25, 0.5, 0.001, 0.02};
    rows[1] = {-5, "V", "H", -3.0, 0, 1e-9, std::nullopt};
    std::ostringstream os;
    write_csv(os, rows);
    EXPECT_EQ(os.str(),
              "power_db,qt,qr,snr_db,frac_interf_limited,interference,ber\n"
              "-5,best,best,1.25,0.5,0.001,0.02\n"
              "-5,V,H,-3,0,1e-09,\n");
}

TEST(Svg, SelfContainedWithLabels) {
    std::vector<Curve> curves{{"V,V", {0, 10, 20}, {-3, 7, NAN}}, {"V,H", {0, 10}, {-10, 0}}};
    std::ostringstream os;
    write_svg(os, curves, "test chart");
    const std::string s = os.str();
    EXPECT_NE(s.find("<svg xmlns"), std::string::npos);
    EXPECT_NE(s.find("</svg>"), std::string::npos);
    EXPECT_NE(s.find("test chart"), std::string::npos);
    EXPECT_NE(s.find("P_maxSU/P_noise (dB)"), std::string::npos);
    EXPECT_NE(s.find("Average SNR at SR (dB)"), std::string::npos);
    EXPECT_NE(s.find("V,H"), std::string::npos);
    EXPECT_EQ(s.find("nan"), std::string::npos);
    EXPECT_EQ(s.find("href"), std::string::npos); // no external resources
}

TEST(Svg, CurvesFromRowsGroupsByMode) {
    std::vector<TableRow> rows;
    for (double p : {0.0, 5.0}) {
        rows.push_back({p, "best", "best", p, 0, 0, std::nullopt});
        rows.push_back({p, "V", "V", p - 1, 0, 0, std::nullopt});
    }
    const auto curves = curves_from_rows(rows);
    ASSERT_EQ(curves.size(), 2u);
    EXPECT_EQ(curves[0].x, (std::vector<double>{0, 5}));
    EXPECT_EQ(curves[1].y, (std::vector<double>{-1, 4}));
}
