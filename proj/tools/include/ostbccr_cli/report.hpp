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

#include <ostream>
#include <string>
#include <vector>

#include "ostbccr/montecarlo.hpp"

namespace ostbccr::cli {

/// Locale-independent shortest round-trip formatting ("nan", "inf", "-inf"
/// for non-finite values).
std::string format_number(double v);

/// header: power_db,qt,qr,snr_db,frac_interf_limited,interference,ber
void write_csv(std::ostream& os, const std::vector<TableRow>& rows);

struct Curve {
    std::string label;
    std::vector<double> x;
    std::vector<double> y; // non-finite points are skipped
};

/// Self-contained SVG line chart with dB axes.
void write_svg(std::ostream& os, const std::vector<Curve>& curves, const std::string& title);

/// One curve per (qt, qr) label found in the rows.
std::vector<Curve> curves_from_rows(const std::vector<TableRow>& rows);

} // namespace ostbccr::cli
