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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ostbccr_cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace ostbccr::cli;

    CLI::App app{"ostbc-cr: minimum-variance OSTBC precoder for cognitive radio"};
    RunManifest manifest;
    std::string config;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    std::string q_form = "corrected";

    app.add_option("--command", manifest.command, "sweep | compare-modes | ber | verify")
        ->required()
        ->check(CLI::IsMember({"sweep", "compare-modes", "ber", "verify"}));
    app.add_option("--config", config, "experiment config (YAML)");
    auto* out_opt =
        app.add_option("--out", out_dir, "output directory (verify: report copy only if given)")
            ->capture_default_str();
    auto* seed_opt = app.add_option("--seed", seed, "override the config seed");
    // Negative control for verify; not part of the documented interface.
    app.add_option("--q-form", q_form)->check(CLI::IsMember({"corrected", "printed"}))->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    manifest.config = config;
    if (manifest.command != "verify" || *out_opt) {
        manifest.out_dir = out_dir;
    }
    if (*seed_opt) {
        manifest.seed = seed;
    }
    manifest.threads = threads_from_env();
    manifest.q_form = q_form == "printed" ? ostbccr::QForm::Printed : ostbccr::QForm::Corrected;
    return run_command(manifest, std::cout, std::cerr);
}
