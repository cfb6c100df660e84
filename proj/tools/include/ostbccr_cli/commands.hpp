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
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "ostbccr/precoder.hpp"

namespace ostbccr::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 1,
    kExitNumerical = 2,
    kExitInvariant = 3,
};

struct RunManifest {
    std::string command; // sweep | compare-modes | ber | verify
    std::filesystem::path config;
    std::filesystem::path out_dir;
    std::optional<std::uint64_t> seed;
    int threads{0};
    QForm q_form{QForm::Corrected}; // verify negative control
};

/// Dispatches a command. Writes result.csv, snr_vs_power.svg and
/// run_manifest.txt into out_dir for the experiment commands; on any error no
/// output file is left behind.
int run_command(const RunManifest& manifest, std::ostream& out, std::ostream& err);

int cmd_sweep(const RunManifest& manifest, std::ostream& out, std::ostream& err);
int cmd_compare_modes(const RunManifest& manifest, std::ostream& out, std::ostream& err);
int cmd_ber(const RunManifest& manifest, std::ostream& out, std::ostream& err);
int cmd_verify(const RunManifest& manifest, std::ostream& out, std::ostream& err);

/// Reads PRECODER_THREADS; 0 (auto) when unset or invalid.
int threads_from_env();

} // namespace ostbccr::cli
