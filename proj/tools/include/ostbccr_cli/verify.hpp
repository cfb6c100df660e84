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
#include <ostream>
#include <string>
#include <vector>

#include "ostbccr/montecarlo.hpp"

namespace ostbccr::cli {

/// A seeded random precoder problem: Rayleigh secondary link (kept as Heq so
/// symbol-level simulation is possible), generic SPD interference correlation,
/// and power budget / cap drawn in [-10, 20] dB.
struct RandomInstance {
    OstbcCode code;
    RealMat heq;
    PrecoderInputs inputs;
};

RandomInstance random_instance(CodeName name, std::uint64_t seed, std::uint64_t index,
                               int n_rx = 2);

struct CheckResult {
    std::string name;
    bool pass{true};
    double worst{0};     // worst observed metric
    double tolerance{0}; // pass iff worst <= tolerance
    std::string detail;  // replay hint on failure
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Runs the invariant suite on seeded random instances. QForm::Printed is the
/// negative control: the structure-constraint check must then fail.
VerifyReport run_verify(std::uint64_t seed, QForm form = QForm::Corrected);

void print_report(std::ostream& os, const VerifyReport& report, std::uint64_t seed);

} // namespace ostbccr::cli
